#include "oideal/rees.hpp"

#include <algorithm>
#include <map>

namespace oideal {

namespace {

struct SymBasis {
    std::vector<Expvec> monos;  // degree-d exponent vectors in the Y variables
    std::map<Expvec, int> index;
};

void gen_monos(int m, int deg, Expvec& cur, int at, std::vector<Expvec>& out) {
    if (at == m - 1) {
        cur[(std::size_t)at] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[(std::size_t)at] = e;
        gen_monos(m, deg - e, cur, at + 1, out);
    }
}

SymBasis sym_basis(int m, int d) {
    SymBasis b;
    Expvec cur((std::size_t)m, 0);
    gen_monos(m, d, cur, 0, b.monos);
    for (int i = 0; i < (int)b.monos.size(); ++i) b.index[b.monos[(std::size_t)i]] = i;
    return b;
}

}  // namespace

ReesPresentation rees_of_module(const Ring& base, const std::vector<FreeElement>& generators,
                                const Limits* limits) {
    if (generators.empty()) throw std::invalid_argument("rees_of_module: empty generating set");
    int m = generators[0].rank();
    int n = (int)generators.size();
    for (const auto& u : generators) {
        check_same_ring(u.ring(), base, "rees_of_module");
        if (u.rank() != m) throw std::invalid_argument("generators live in different free modules");
    }

    auto ynames = fresh_var_names(base, "Y", m);
    auto tnames = fresh_var_names(base, "T", n);

    // Graph ring [Y | x | T], eliminating the Y block.
    std::vector<std::string> vars = ynames;
    std::vector<long> weights((std::size_t)m, 1);
    for (int i = 0; i < base.nvars(); ++i) {
        vars.push_back(base.vars()[(std::size_t)i]);
        weights.push_back(base.weights()[(std::size_t)i]);
    }
    for (int i = 0; i < n; ++i) {
        vars.push_back(tnames[(std::size_t)i]);
        weights.push_back(1);
    }
    std::vector<Polynomial> big_quotient_src = base.quotient();
    Ring big = Ring::make(base.field(), vars, weights, OrderSpec{OrderKind::elim, m}, {});
    std::vector<int> xmap((std::size_t)base.nvars());
    for (int i = 0; i < base.nvars(); ++i) xmap[(std::size_t)i] = m + i;

    std::vector<Polynomial> graph;
    for (int i = 0; i < n; ++i) {
        Polynomial lin(big);
        for (int j = 0; j < m; ++j)
            lin = lin + transport_poly(generators[(std::size_t)i][j], big, xmap) *
                            Polynomial::variable(big, j);
        graph.push_back(Polynomial::variable(big, m + base.nvars() + i) - lin);
    }
    for (const auto& q : big_quotient_src) graph.push_back(transport_poly(q, big, xmap));

    GroebnerOptions opts;
    opts.limits = limits;
    GroebnerBasis ggb = groebner_ideal(big, graph, opts);

    // R[T] with the base quotient carried along.
    Ring rees_ring = extend_ring(base, base.nvars(), tnames, std::vector<long>((std::size_t)n, 1),
                                 OrderSpec{OrderKind::grevlex}, true);
    std::vector<int> down((std::size_t)big.nvars(), -1);
    for (int i = 0; i < base.nvars(); ++i) down[(std::size_t)(m + i)] = i;
    for (int i = 0; i < n; ++i) down[(std::size_t)(m + base.nvars() + i)] = base.nvars() + i;
    std::vector<Polynomial> rees_gens;
    for (const auto& e : eliminate(ggb, m)) {
        Polynomial p = transport_poly(e[0], rees_ring, down);
        if (rees_ring.has_quotient() && is_member(*rees_ring.quotient_basis(), p)) continue;
        rees_gens.push_back(std::move(p));
    }
    Ideal rees_ideal(rees_ring, rees_gens);

    // Special fiber: eliminate the base variables from rees_ideal + m.
    std::vector<std::string> fvars = base.vars();
    std::vector<long> fweights = base.weights();
    for (int i = 0; i < n; ++i) {
        fvars.push_back(tnames[(std::size_t)i]);
        fweights.push_back(1);
    }
    Ring fib_big = Ring::make(base.field(), fvars, fweights,
                              OrderSpec{OrderKind::elim, base.nvars()}, {});
    std::vector<int> rees_to_fib((std::size_t)rees_ring.nvars());
    for (int i = 0; i < rees_ring.nvars(); ++i) rees_to_fib[(std::size_t)i] = i;
    std::vector<Polynomial> fib_gens;
    for (const auto& g : rees_gens) fib_gens.push_back(transport_poly(g, fib_big, rees_to_fib));
    for (const auto& q : base.quotient()) {
        std::vector<int> qmap((std::size_t)base.nvars());
        for (int i = 0; i < base.nvars(); ++i) qmap[(std::size_t)i] = i;
        fib_gens.push_back(transport_poly(q, fib_big, qmap));
    }
    for (int i = 0; i < base.nvars(); ++i) fib_gens.push_back(Polynomial::variable(fib_big, i));
    GroebnerBasis fgb = groebner_ideal(fib_big, fib_gens, opts);

    Ring fiber_ring = Ring::make(base.field(), tnames, std::vector<long>((std::size_t)n, 1),
                                 OrderSpec{OrderKind::grevlex}, {});
    std::vector<int> fib_down((std::size_t)fib_big.nvars(), -1);
    for (int i = 0; i < n; ++i) fib_down[(std::size_t)(base.nvars() + i)] = i;
    std::vector<Polynomial> fiber_gens;
    for (const auto& e : eliminate(fgb, base.nvars()))
        fiber_gens.push_back(transport_poly(e[0], fiber_ring, fib_down));
    Ideal fiber_ideal(fiber_ring, fiber_gens);

    ReesPresentation rp;
    rp.base = base;
    rp.ambient_rank = m;
    rp.generators = generators;
    rp.rees_ring = rees_ring;
    rp.rees_ideal = rees_ideal;
    rp.fiber_ring = fiber_ring;
    rp.fiber_ideal = fiber_ideal;
    rp.analytic_spread = dimension(fiber_ideal).dim_quotient;
    rp.module_rank = rank_over_fraction_field(matrix_from_rows(base, m, generators));

    // l(M) <= mu(M), and for the graded corpus l(M) <= dim R + rank M - 1.
    if (rp.analytic_spread > n)
        throw std::logic_error("analytic spread exceeds the generator count");
    int dimR = base.nvars() - base.quotient_height();
    if (rp.module_rank > 0 && rp.analytic_spread > dimR + rp.module_rank - 1)
        throw std::logic_error("analytic spread exceeds dim R + rank - 1");
    return rp;
}

ReesPresentation rees_of_ideal(const Ideal& I, const Limits* limits) {
    std::vector<FreeElement> gens;
    for (const auto& g : I.generators()) gens.push_back(FreeElement(I.ring(), {g}));
    return rees_of_module(I.ring(), gens, limits);
}

int analytic_spread(const ReesPresentation& rp) { return rp.analytic_spread; }

namespace {

/// Homogeneous Y-degree-d polynomial in R[Y] (Y variables at the end) to a
/// coordinate vector over the degree-d symmetric basis.
FreeElement sym_coordinates(const Ring& base, const Ring& ry, const Polynomial& p, int m,
                            const SymBasis& basis) {
    FreeElement out(base, (int)basis.monos.size());
    int nb = base.nvars();
    for (const auto& t : p.terms()) {
        Expvec ypart((std::size_t)m, 0), xpart((std::size_t)nb, 0);
        for (int i = 0; i < nb; ++i) xpart[(std::size_t)i] = t.exps[(std::size_t)i];
        for (int j = 0; j < m; ++j) ypart[(std::size_t)j] = t.exps[(std::size_t)(nb + j)];
        auto it = basis.index.find(ypart);
        if (it == basis.index.end()) throw std::logic_error("inhomogeneous symmetric coordinate");
        add_scaled(out[it->second], t.coeff, xpart, Polynomial::constant(base, 1));
    }
    (void)ry;
    return out;
}

}  // namespace

ReductionCertificate module_reduction_test(const Ring& base, const std::vector<FreeElement>& U,
                                           const std::vector<FreeElement>& M, int n_max,
                                           const Limits* limits) {
    if (M.empty()) throw std::invalid_argument("empty module generating set");
    int m = M[0].rank();
    GroebnerOptions opts;
    opts.limits = limits;
    GroebnerBasis mgb = groebner(base, M, m, opts);
    for (const auto& u : U)
        if (!is_member(mgb, u)) throw std::invalid_argument("U is not contained in M");

    // Linear forms in R[Y].
    auto ynames = fresh_var_names(base, "Y", m);
    Ring ry = extend_ring(base, base.nvars(), ynames, std::vector<long>((std::size_t)m, 1),
                          base.order().kind == OrderKind::elim ? OrderSpec{} : base.order(), true);
    std::vector<int> up((std::size_t)base.nvars());
    for (int i = 0; i < base.nvars(); ++i) up[(std::size_t)i] = i;
    auto linear_form = [&](const FreeElement& v) {
        Polynomial lin(ry);
        for (int j = 0; j < m; ++j)
            lin = lin + transport_poly(v[j], ry, up) * Polynomial::variable(ry, base.nvars() + j);
        return lin;
    };
    std::vector<Polynomial> mforms, uforms;
    for (const auto& v : M) mforms.push_back(linear_form(v));
    for (const auto& v : U) uforms.push_back(linear_form(v));

    // Degree-n products of M generators as non-decreasing index words.
    struct Prod {
        int last;
        Polynomial p;
    };
    std::vector<Prod> cur{{0, Polynomial::constant(ry, 1)}};  // the empty product

    ReductionCertificate cert;
    cert.cap = n_max;
    for (int n = 0; n <= n_max; ++n) {
        if (limits) limits->check_deadline();
        std::vector<Prod> next;  // degree-(n+1) M-products
        for (const auto& pr : cur)
            for (int i = pr.last; i < (int)mforms.size(); ++i)
                next.push_back({i, pr.p * mforms[(std::size_t)i]});
        SymBasis basis = sym_basis(m, n + 1);
        std::vector<FreeElement> rhs;  // U times the degree-n products
        for (const auto& pr : cur)
            for (const auto& u : uforms)
                rhs.push_back(sym_coordinates(base, ry, pr.p * u, m, basis));
        GroebnerBasis rgb = groebner(base, rhs, (int)basis.monos.size(), opts);
        bool ok = true;
        for (const auto& pr : next) {
            if (!is_member(rgb, sym_coordinates(base, ry, pr.p, m, basis))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            cert.confirmed = true;
            cert.n = n;
            return cert;
        }
        cur = std::move(next);
    }
    return cert;
}

std::vector<std::vector<Scalar>> degree_one_images(const Ring& base,
                                                   const std::vector<FreeElement>& U,
                                                   const std::vector<FreeElement>& M) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& u : U) {
        auto lift = lift_through(base, M, u);
        if (!lift) throw std::invalid_argument("U vector is not in the module");
        std::vector<Scalar> img;
        for (const auto& c : *lift) img.push_back(c.constant_coeff());
        out.push_back(std::move(img));
    }
    return out;
}

int fiber_obstruction_dimension(const ReesPresentation& rp,
                                const std::vector<std::vector<Scalar>>& u_coeff_images) {
    const Ring& fr = rp.fiber_ring;
    std::vector<Polynomial> gens = rp.fiber_ideal.generators();
    for (const auto& img : u_coeff_images) {
        if ((int)img.size() != (int)rp.generators.size())
            throw std::invalid_argument("image length must match the generator count");
        Polynomial lin(fr);
        for (int i = 0; i < (int)img.size(); ++i)
            lin = lin + Polynomial::constant(fr, img[(std::size_t)i]) * Polynomial::variable(fr, i);
        if (!lin.is_zero()) gens.push_back(lin);
    }
    HeightReport rep = dimension(Ideal(fr, std::move(gens)));
    return rep.dim_quotient < 0 ? 0 : rep.dim_quotient;
}

Thm12Report theorem_1_2_check(const Ring& base, const std::vector<FreeElement>& M_embedding,
                              const std::vector<FreeElement>& U_vectors, int n_max,
                              const Limits* limits) {
    Thm12Report rep;
    rep.t = (int)U_vectors.size();

    ReesPresentation rp = rees_of_module(base, M_embedding, limits);
    rep.rank = rp.module_rank;
    rep.bound = std::max(0, rep.t + 1 - rep.rank);

    auto images = degree_one_images(base, U_vectors, M_embedding);
    rep.obstruction_dim = fiber_obstruction_dimension(rp, images);
    rep.integral = rep.obstruction_dim == 0;
    rep.degreewise = module_reduction_test(base, U_vectors, M_embedding, n_max, limits);

    // U as coefficient vectors over M's generators, for the colon.
    SubmodulePresentation sp = present_submodule(base, M_embedding);
    std::vector<FreeElement> ucoeff;
    for (const auto& u : U_vectors) {
        auto lift = lift_through(base, M_embedding, u);
        if (!lift) throw std::invalid_argument("U vector is not in the module");
        ucoeff.push_back(FreeElement(base, *lift));
    }
    rep.colon = dimension(module_colon(ucoeff, sp.module));

    if (rep.integral) {
        rep.vacuous = true;
        rep.bound_holds = true;
    } else {
        rep.vacuous = false;
        rep.bound_holds = rep.colon.height && *rep.colon.height <= rep.bound;
    }
    return rep;
}

}  // namespace oideal
