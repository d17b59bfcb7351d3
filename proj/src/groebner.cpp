#include "oideal/groebner.hpp"

#include <algorithm>

#include "oideal/detail/vecpoly.hpp"

namespace oideal {

using detail::EngineContext;
using detail::VecPoly;

void Limits::check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw ResourceError("deadline exceeded");
}

Limits& default_limits() {
    static Limits lim;
    return lim;
}

GroebnerBasis GroebnerBasis::from_raw(Ring ring, int ambient, ModuleOrder order,
                                      std::vector<detail::VecPoly> raw) {
    GroebnerBasis gb;
    gb.ring_ = std::move(ring);
    gb.ambient_ = ambient;
    gb.order_ = order;
    for (const auto& v : raw) gb.elems_.push_back(detail::from_vecpoly(gb.ring_, ambient, v));
    gb.raw_ = std::make_shared<const std::vector<detail::VecPoly>>(std::move(raw));
    return gb;
}

bool GroebnerBasis::contains_unit() const {
    for (const auto& v : *raw_) {
        if (v.is_zero()) continue;
        const auto& lt = v.lead();
        bool constant = true;
        for (auto e : lt.exps) constant = constant && e == 0;
        if (constant) return true;
    }
    return false;
}

namespace {

std::vector<VecPoly> quotient_unit_vectors(const EngineContext& cx, int ambient) {
    std::vector<VecPoly> out;
    for (const auto& q : cx.ring.quotient()) {
        // Quotient generators live over the quotient-free base ring with the
        // same variables, so their terms carry over directly.
        for (int pos = 0; pos < ambient; ++pos) {
            VecPoly v;
            for (const auto& t : q.terms()) v.terms.push_back(detail::MTerm{pos, t.exps, t.coeff});
            out.push_back(std::move(v));
        }
    }
    return out;
}

const Limits* pick_limits(const Limits* l) { return l ? l : &default_limits(); }

}  // namespace

GroebnerBasis groebner(const Ring& ring, const std::vector<FreeElement>& vectors, int ambient_rank,
                       const GroebnerOptions& opts) {
    EngineContext cx{ring, ModuleOrder{ring.order(), opts.rule, -1}, pick_limits(opts.limits)};
    std::vector<VecPoly> gens;
    for (const auto& v : vectors) {
        check_same_ring(v.ring(), ring, "groebner");
        if (v.rank() != ambient_rank) throw std::invalid_argument("ambient rank mismatch");
        gens.push_back(detail::to_vecpoly(cx, v));
    }
    if (opts.adjoin_quotient && ring.has_quotient()) {
        auto extra = quotient_unit_vectors(cx, ambient_rank);
        for (auto& e : extra) gens.push_back(std::move(e));
    }
    auto basis = detail::buchberger(cx, std::move(gens));
    return GroebnerBasis::from_raw(ring, ambient_rank, cx.order, std::move(basis));
}

GroebnerBasis groebner_ideal(const Ring& ring, const std::vector<Polynomial>& gens,
                             const GroebnerOptions& opts) {
    std::vector<FreeElement> vecs;
    for (const auto& g : gens) {
        check_same_ring(g.ring(), ring, "groebner");
        vecs.push_back(FreeElement(ring, {g}));
    }
    return groebner(ring, vecs, 1, opts);
}

FreeElement normal_form(const GroebnerBasis& gb, const FreeElement& v) {
    check_same_ring(v.ring(), gb.ring(), "normal_form");
    if (v.rank() != gb.ambient_rank()) throw std::invalid_argument("ambient rank mismatch");
    EngineContext cx{gb.ring(), gb.order(), &default_limits()};
    VecPoly r = detail::vp_normal_form(cx, detail::to_vecpoly(cx, v), gb.raw());
    return detail::from_vecpoly(gb.ring(), gb.ambient_rank(), r);
}

Polynomial normal_form(const GroebnerBasis& gb, const Polynomial& p) {
    check_same_ring(p.ring(), gb.ring(), "normal_form");
    if (gb.ambient_rank() != 1) throw std::invalid_argument("ambient rank mismatch");
    EngineContext cx{gb.ring(), gb.order(), &default_limits()};
    VecPoly r = detail::vp_normal_form(cx, detail::poly_to_vecpoly(cx, p), gb.raw());
    return detail::poly_from_vecpoly(gb.ring(), r);
}

bool is_member(const GroebnerBasis& gb, const FreeElement& v) { return normal_form(gb, v).is_zero(); }
bool is_member(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(gb, p).is_zero(); }

std::vector<FreeElement> eliminate(const GroebnerBasis& gb, int k) {
    const OrderSpec& ord = gb.order().ring_order;
    bool ok = (ord.kind == OrderKind::elim && ord.elim_block == k) || ord.kind == OrderKind::lex ||
              k == 0;
    if (!ok) throw std::invalid_argument("basis was not computed under an elimination order for k");
    std::vector<FreeElement> out;
    for (const auto& e : gb.elements()) {
        bool uses_block = false;
        for (const auto& c : e.coords())
            for (const auto& t : c.terms())
                for (int i = 0; i < k; ++i) uses_block = uses_block || t.exps[(std::size_t)i] != 0;
        if (!uses_block) out.push_back(e);
    }
    return out;
}

namespace {

struct AugmentedSetup {
    EngineContext cx;
    std::vector<VecPoly> gens;
    int n;        // head rank
    int s;        // input count (syzygy coordinates of interest)
    int total;    // head + all tails
};

AugmentedSetup augmented_setup(const Ring& ring, const std::vector<FreeElement>& vectors,
                               const Limits* limits) {
    int n = vectors.empty() ? 0 : vectors[0].rank();
    std::vector<FreeElement> all = vectors;
    if (ring.has_quotient()) {
        for (const auto& q : ring.quotient()) {
            std::vector<int> idmap((std::size_t)ring.nvars());
            for (int i = 0; i < ring.nvars(); ++i) idmap[(std::size_t)i] = i;
            Polynomial qq = transport_poly(q, ring, idmap);
            for (int pos = 0; pos < n; ++pos) {
                FreeElement e(ring, n);
                e[pos] = qq;
                all.push_back(std::move(e));
            }
        }
    }
    int t = (int)all.size();
    AugmentedSetup setup{
        EngineContext{ring,
                      ModuleOrder{ring.order(), PositionRule::position_over_term, n},
                      pick_limits(limits)},
        {},
        n,
        (int)vectors.size(),
        n + t};
    for (int i = 0; i < t; ++i) {
        const FreeElement& v = all[(std::size_t)i];
        check_same_ring(v.ring(), ring, "syzygies");
        if (v.rank() != n) throw std::invalid_argument("vectors live in different free modules");
        VecPoly w;
        for (int p = 0; p < n; ++p)
            for (const auto& tm : v[p].terms()) w.terms.push_back(detail::MTerm{p, tm.exps, tm.coeff});
        Expvec zero((std::size_t)ring.nvars(), 0);
        w.terms.push_back(detail::MTerm{n + i, zero, ring.field().one()});
        std::sort(w.terms.begin(), w.terms.end(), [&](const detail::MTerm& a, const detail::MTerm& b) {
            return setup.cx.cmp(a, b) > 0;
        });
        setup.gens.push_back(std::move(w));
    }
    return setup;
}

}  // namespace

SyzygyResult syzygies(const Ring& ring, const std::vector<FreeElement>& vectors,
                      const Limits* limits) {
    SyzygyResult result;
    if (vectors.empty()) return result;
    AugmentedSetup setup = augmented_setup(ring, vectors, limits);
    auto basis = detail::buchberger(setup.cx, std::move(setup.gens));
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.lead().pos < setup.n) continue;  // still has a head component
        FreeElement syz(ring, setup.s);
        bool nonzero = false;
        for (const auto& t : g.terms) {
            int idx = t.pos - setup.n;
            if (idx < setup.s) {
                nonzero = true;
                add_scaled(syz[idx], t.coeff, t.exps,
                           Polynomial::constant(ring, 1));
            }
        }
        if (nonzero) result.generators_of_kernel.push_back(std::move(syz));
    }
    return result;
}

SyzygyResult syzygies_of_polys(const Ring& ring, const std::vector<Polynomial>& polys,
                               const Limits* limits) {
    std::vector<FreeElement> vecs;
    for (const auto& p : polys) vecs.push_back(FreeElement(ring, {p}));
    return syzygies(ring, vecs, limits);
}

std::optional<std::vector<Polynomial>> lift_through(const Ring& ring,
                                                    const std::vector<FreeElement>& vectors,
                                                    const FreeElement& v) {
    if (vectors.empty()) {
        if (v.is_zero()) return std::vector<Polynomial>{};
        return std::nullopt;
    }
    AugmentedSetup setup = augmented_setup(ring, vectors, nullptr);
    auto basis = detail::buchberger(setup.cx, std::move(setup.gens));
    VecPoly target;
    for (int p = 0; p < setup.n; ++p)
        for (const auto& tm : v[p].terms()) target.terms.push_back(detail::MTerm{p, tm.exps, tm.coeff});
    std::sort(target.terms.begin(), target.terms.end(),
              [&](const detail::MTerm& a, const detail::MTerm& b) { return setup.cx.cmp(a, b) > 0; });
    VecPoly nf = detail::vp_normal_form(setup.cx, std::move(target), basis);
    const Field& F = ring.field();
    std::vector<Polynomial> coeffs((std::size_t)setup.s, Polynomial(ring));
    for (const auto& t : nf.terms) {
        if (t.pos < setup.n) return std::nullopt;  // not in the submodule
        int idx = t.pos - setup.n;
        if (idx < setup.s)
            add_scaled(coeffs[(std::size_t)idx], F.neg(t.coeff), t.exps, Polynomial::constant(ring, 1));
    }
    return coeffs;
}

std::vector<Polynomial> kernel_of_map(const Ring& source, const Ring& target,
                                      const std::vector<Polynomial>& images,
                                      const Limits* limits) {
    if ((int)images.size() != source.nvars())
        throw std::invalid_argument("one image per source variable required");
    if (source.has_quotient())
        throw std::invalid_argument("kernel_of_map requires a free polynomial source ring");
    for (const auto& im : images) check_same_ring(im.ring(), target, "kernel_of_map");

    int nt = target.nvars(), ns = source.nvars();
    std::vector<std::string> vars = target.vars();
    std::vector<long> weights = target.weights();
    for (int i = 0; i < ns; ++i) {
        std::string name = source.vars()[(std::size_t)i];
        while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
        vars.push_back(name);
        weights.push_back(source.weights()[(std::size_t)i]);
    }
    Ring big = Ring::make(target.field(), vars, weights, OrderSpec{OrderKind::elim, nt}, {});

    std::vector<int> tmap((std::size_t)nt), smap((std::size_t)ns);
    for (int i = 0; i < nt; ++i) tmap[(std::size_t)i] = i;
    for (int i = 0; i < ns; ++i) smap[(std::size_t)i] = nt + i;

    std::vector<Polynomial> gens;
    for (int i = 0; i < ns; ++i)
        gens.push_back(Polynomial::variable(big, nt + i) - transport_poly(images[(std::size_t)i], big, tmap));
    for (const auto& q : target.quotient()) gens.push_back(transport_poly(q, big, tmap));

    GroebnerOptions opts;
    opts.limits = limits;
    GroebnerBasis gb = groebner_ideal(big, gens, opts);
    std::vector<Polynomial> out;
    std::vector<int> back((std::size_t)big.nvars(), -1);
    for (int i = 0; i < ns; ++i) back[(std::size_t)(nt + i)] = i;
    for (const auto& e : eliminate(gb, nt)) out.push_back(transport_poly(e[0], source, back));
    return out;
}

}  // namespace oideal
