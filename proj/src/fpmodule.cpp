#include "oideal/fpmodule.hpp"

#include "oideal/rng.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oideal {

FPModule::FPModule(Ring ring, int n_generators, PolyMatrix relations, std::vector<std::string> labels)
    : ring_(std::move(ring)), n_(n_generators), rel_(std::move(relations)), labels_(std::move(labels)) {
    if (rel_.rows() != n_) throw std::invalid_argument("relation matrix must have one row per generator");
    if (!labels_.empty() && (int)labels_.size() != n_)
        throw std::invalid_argument("one label per generator");
}

FPModule FPModule::free_module(const Ring& r, int n) { return FPModule(r, n, PolyMatrix(r, n, 0)); }

int FPModule::rank() const { return n_ - rank_over_fraction_field(rel_); }

namespace {

bool nonzero_mod_quotient(const Ring& ring, const Polynomial& p) {
    if (p.is_zero()) return false;
    if (!ring.has_quotient()) return true;
    return !is_member(*ring.quotient_basis(), p);
}

Polynomial reduce_mod_quotient(const Ring& ring, const Polynomial& p) {
    if (!ring.has_quotient()) return p;
    return normal_form(*ring.quotient_basis(), p);
}

}  // namespace

int rank_over_fraction_field(const PolyMatrix& A) {
    const Ring& ring = A.ring();
    int nr = A.rows(), nc = A.cols();
    std::vector<std::vector<Polynomial>> a((std::size_t)nr);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) a[(std::size_t)i].push_back(A.at(i, j));
    Polynomial prev = Polynomial::constant(ring, 1);
    int r = 0;
    while (r < nr && r < nc) {
        int pi = -1, pj = -1;
        for (int i = r; i < nr && pi < 0; ++i)
            for (int j = r; j < nc; ++j)
                if (nonzero_mod_quotient(ring, a[(std::size_t)i][(std::size_t)j])) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(a[(std::size_t)r], a[(std::size_t)pi]);
        if (pj != r)
            for (int i = 0; i < nr; ++i)
                std::swap(a[(std::size_t)i][(std::size_t)r], a[(std::size_t)i][(std::size_t)pj]);
        // Bareiss step: entries stay minors of the original matrix.
        for (int i = r + 1; i < nr; ++i)
            for (int j = r + 1; j < nc; ++j)
                a[(std::size_t)i][(std::size_t)j] = divide_exact(
                    a[(std::size_t)r][(std::size_t)r] * a[(std::size_t)i][(std::size_t)j] -
                        a[(std::size_t)i][(std::size_t)r] * a[(std::size_t)r][(std::size_t)j],
                    prev);
        prev = a[(std::size_t)r][(std::size_t)r];
        ++r;
    }
    return r;
}

SubmodulePresentation present_submodule(const Ring& ring, const std::vector<FreeElement>& gens,
                                        std::vector<std::string> labels) {
    SyzygyResult syz = syzygies(ring, gens);
    PolyMatrix rel = matrix_from_columns(ring, (int)gens.size(), syz.generators_of_kernel);
    return SubmodulePresentation{FPModule(ring, (int)gens.size(), std::move(rel), std::move(labels)),
                                 gens};
}

SubmodulePresentation present_ideal_as_module(const Ideal& I) {
    std::vector<FreeElement> vecs;
    for (const auto& g : I.generators()) vecs.push_back(FreeElement(I.ring(), {g}));
    return present_submodule(I.ring(), vecs);
}

FPModule minimalize(const FPModule& N) {
    const Ring& ring = N.ring();
    const Field& F = ring.field();
    int n = N.n_generators();
    std::vector<std::vector<Polynomial>> cols;
    for (int j = 0; j < N.relations().cols(); ++j) {
        std::vector<Polynomial> c;
        for (int i = 0; i < n; ++i) c.push_back(reduce_mod_quotient(ring, N.relations().at(i, j)));
        cols.push_back(std::move(c));
    }
    std::vector<std::string> labels = N.labels();
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i + 1));

    for (;;) {
        int pi = -1, pj = -1;
        for (int j = 0; j < (int)cols.size() && pi < 0; ++j) {
            for (int i = 0; i < n; ++i) {
                const Polynomial& e = cols[(std::size_t)j][(std::size_t)i];
                if (e.is_zero()) continue;
                Scalar c0 = e.constant_coeff();
                if (F.is_zero(c0)) continue;
                if (!e.is_constant())
                    throw std::invalid_argument(
                        "minimalize: relation entry mixes a constant with higher-order terms "
                        "(non-graded input)");
                pi = i;
                pj = j;
                break;
            }
        }
        if (pi < 0) break;
        Scalar c = cols[(std::size_t)pj][(std::size_t)pi].constant_coeff();
        Scalar cinv = F.inv(c);
        std::vector<std::vector<Polynomial>> next;
        for (int j = 0; j < (int)cols.size(); ++j) {
            if (j == pj) continue;
            std::vector<Polynomial> col;
            Polynomial factor = Polynomial::constant(ring, F.mul(cinv, F.neg(ring.field().one()))) *
                                cols[(std::size_t)j][(std::size_t)pi];
            for (int i = 0; i < n; ++i) {
                if (i == pi) continue;
                Polynomial e = cols[(std::size_t)j][(std::size_t)i] +
                               factor * cols[(std::size_t)pj][(std::size_t)i];
                col.push_back(reduce_mod_quotient(ring, e));
            }
            bool zero = true;
            for (const auto& e : col) zero = zero && e.is_zero();
            if (!zero) next.push_back(std::move(col));
        }
        cols = std::move(next);
        labels.erase(labels.begin() + pi);
        --n;
    }
    PolyMatrix rel(ring, n, (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j)
        for (int i = 0; i < n; ++i) rel.at(i, j) = cols[(std::size_t)j][(std::size_t)i];
    return FPModule(ring, n, std::move(rel), std::move(labels));
}

namespace {

bool zero_mod_quotient(const Ring& ring, const FreeElement& v) {
    for (const auto& c : v.coords())
        if (nonzero_mod_quotient(ring, c)) return false;
    return true;
}

}  // namespace

PerpResult perpendicular(const FPModule& N0, const PerpOptions& opts) {
    FPModule N = opts.minimalize_first ? minimalize(N0) : N0;
    const Ring& ring = N.ring();
    int n = N.n_generators();
    int m = N.relations().cols();
    std::vector<FreeElement> rows;
    for (int i = 0; i < n; ++i) rows.push_back(N.relations().row(i));
    SyzygyResult syz = syzygies(ring, rows);
    // Soundness: each relation applied to the embedding vectors vanishes.
    for (const auto& s : syz.generators_of_kernel) {
        if (m == 0) break;
        FreeElement applied = combine(s.coords(), rows);
        if (!zero_mod_quotient(ring, applied))
            throw std::logic_error("perpendicular: syzygy does not annihilate the embedding");
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        std::string base = N.labels().empty() ? "x" + std::to_string(i + 1) : N.labels()[(std::size_t)i];
        labels.push_back(base + "-perp");
    }
    PolyMatrix rel = matrix_from_columns(ring, n, syz.generators_of_kernel);
    return PerpResult{FPModule(ring, n, std::move(rel), std::move(labels)), std::move(rows)};
}

std::vector<FreeElement> dual_generators(const FPModule& N) {
    const Ring& ring = N.ring();
    std::vector<FreeElement> rows;
    for (int i = 0; i < N.n_generators(); ++i) rows.push_back(N.relations().row(i));
    SyzygyResult syz = syzygies(ring, rows);
    return syz.generators_of_kernel;
}

namespace {

Polynomial dot(const FreeElement& a, const FreeElement& b) {
    Polynomial s(a.ring());
    for (int i = 0; i < a.rank(); ++i) s = s + a[i] * b[i];
    return s;
}

Ideal order_ideal_dual(const FPModule& N, const FreeElement& x) {
    std::vector<Polynomial> gens;
    for (const auto& f : dual_generators(N)) gens.push_back(dot(f, x));
    return Ideal(N.ring(), std::move(gens));
}

Ideal row_ideal_of_perp(const FPModule& N, int i) {
    PerpResult P = perpendicular(N, PerpOptions{false});
    std::vector<Polynomial> gens;
    for (int j = 0; j < P.perp.relations().cols(); ++j) gens.push_back(P.perp.relations().at(i, j));
    return Ideal(N.ring(), std::move(gens));
}

Ideal order_ideal_row(const FPModule& N, const FreeElement& x) {
    const Ring& ring = N.ring();
    int n = N.n_generators();
    // A listed generator has its row already.
    for (int i = 0; i < n; ++i) {
        bool is_ei = true;
        for (int k = 0; k < n && is_ei; ++k) {
            if (k == i)
                is_ei = x[k].is_unit_constant() && ring.field().is_one(x[k].constant_coeff());
            else
                is_ei = x[k].is_zero();
        }
        if (is_ei) return row_ideal_of_perp(N, i);
    }
    // Append x as an extra generator and take the new row.
    PolyMatrix rel(ring, n + 1, N.relations().cols() + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N.relations().cols(); ++j) rel.at(i, j) = N.relations().at(i, j);
    for (int i = 0; i < n; ++i) rel.at(i, N.relations().cols()) = x[i];
    rel.at(n, N.relations().cols()) = Polynomial::constant(ring, -1);
    FPModule extended(ring, n + 1, std::move(rel));
    return row_ideal_of_perp(extended, n);
}

}  // namespace

OrderIdealResult order_ideal(const FPModule& N, const FreeElement& x, OrderIdealRoute route) {
    check_same_ring(x.ring(), N.ring(), "order_ideal");
    if (x.rank() != N.n_generators())
        throw std::invalid_argument("element must be a coefficient vector over the generators");
    OrderIdealResult res;
    res.route = route;
    res.element_description = x.to_string();
    switch (route) {
        case OrderIdealRoute::dual_kernel:
            res.ideal = order_ideal_dual(N, x);
            break;
        case OrderIdealRoute::row_ideal:
            res.ideal = order_ideal_row(N, x);
            break;
        case OrderIdealRoute::both: {
            Ideal a = order_ideal_row(N, x);
            Ideal b = order_ideal_dual(N, x);
            if (!ideal_equal(a, b))
                throw std::logic_error("order_ideal: row-ideal and dual-kernel routes disagree");
            res.ideal = std::move(a);
            break;
        }
    }
    return res;
}

namespace {

void minors_rec(const PolyMatrix& A, std::vector<int>& rows, std::vector<int>& cols, int size,
                std::vector<Polynomial>& out);

Polynomial det_sub(const PolyMatrix& A, const std::vector<int>& rows, const std::vector<int>& cols) {
    const Ring& ring = A.ring();
    int k = (int)rows.size();
    if (k == 0) return Polynomial::constant(ring, 1);
    if (k == 1) return A.at(rows[0], cols[0]);
    if (k == 2)
        return A.at(rows[0], cols[0]) * A.at(rows[1], cols[1]) -
               A.at(rows[0], cols[1]) * A.at(rows[1], cols[0]);
    if (k == 3) {
        Polynomial d(ring);
        int perm[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
        for (auto& p : perm) {
            Polynomial t = A.at(rows[0], cols[p[0]]) * A.at(rows[1], cols[p[1]]) *
                           A.at(rows[2], cols[p[2]]);
            d = p[3] > 0 ? d + t : d - t;
        }
        return d;
    }
    // Bareiss fraction-free elimination with column pivoting.
    std::vector<std::vector<Polynomial>> a((std::size_t)k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[(std::size_t)i].push_back(A.at(rows[(std::size_t)i], cols[(std::size_t)j]));
    Polynomial prev = Polynomial::constant(ring, 1);
    int sign = 1;
    for (int r = 0; r + 1 < k; ++r) {
        int pi = -1;
        for (int i = r; i < k; ++i)
            if (!a[(std::size_t)i][(std::size_t)r].is_zero()) {
                pi = i;
                break;
            }
        if (pi < 0) return Polynomial(ring);
        if (pi != r) {
            std::swap(a[(std::size_t)r], a[(std::size_t)pi]);
            sign = -sign;
        }
        for (int i = r + 1; i < k; ++i)
            for (int j = r + 1; j < k; ++j)
                a[(std::size_t)i][(std::size_t)j] = divide_exact(
                    a[(std::size_t)r][(std::size_t)r] * a[(std::size_t)i][(std::size_t)j] -
                        a[(std::size_t)i][(std::size_t)r] * a[(std::size_t)r][(std::size_t)j],
                    prev);
        prev = a[(std::size_t)r][(std::size_t)r];
    }
    Polynomial d = a[(std::size_t)(k - 1)][(std::size_t)(k - 1)];
    return sign > 0 ? d : -d;
}

void combos(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    cur.reserve((std::size_t)k);
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - (int)cur.size()); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

Ideal fitting_ideal(const PolyMatrix& A, int j) {
    if (j < 0) throw std::invalid_argument("Fitting index must be nonnegative");
    const Ring& ring = A.ring();
    int n = A.rows();
    int size = n - j;
    if (size <= 0) return Ideal::unit(ring);
    if (size > A.rows() || size > A.cols()) return Ideal::zero(ring);
    std::vector<std::vector<int>> rsets, csets;
    combos(A.rows(), size, rsets);
    combos(A.cols(), size, csets);
    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            Polynomial d = det_sub(A, rs, cs);
            if (d.is_zero()) continue;
            if (!d.leading_coeff().index() && std::get<mpq_class>(d.leading_coeff()) < 0) d = -d;
            std::string key = d.to_string();
            if (seen.insert(key).second) gens.push_back(std::move(d));
        }
    return Ideal(ring, std::move(gens));
}

Ideal module_colon(const std::vector<FreeElement>& U, const FPModule& M) {
    const Ring& ring = M.ring();
    int n = M.n_generators();
    std::vector<FreeElement> W;
    for (const auto& u : U) {
        if (u.rank() != n) throw std::invalid_argument("U vectors must live over M's generators");
        W.push_back(u);
    }
    for (int j = 0; j < M.relations().cols(); ++j) W.push_back(M.relations().col(j));
    std::optional<Ideal> acc;
    for (int i = 0; i < n; ++i) {
        std::vector<FreeElement> vecs;
        vecs.push_back(FreeElement::unit(ring, n, i));
        vecs.insert(vecs.end(), W.begin(), W.end());
        SyzygyResult syz = syzygies(ring, vecs);
        std::vector<Polynomial> gens;
        for (const auto& s : syz.generators_of_kernel)
            if (!s[0].is_zero()) gens.push_back(s[0]);
        Ideal coli(ring, std::move(gens));
        acc = acc ? ideal_intersect(*acc, coli) : coli;
    }
    return acc ? *acc : Ideal::unit(ring);
}

Ideal trace_ideal(const FPModule& N) {
    std::vector<Polynomial> gens;
    for (const auto& f : dual_generators(N))
        for (const auto& c : f.coords())
            if (!c.is_zero()) gens.push_back(c);
    if (N.relations().cols() == 0 && N.n_generators() > 0)
        return Ideal::unit(N.ring());  // free module
    return Ideal(N.ring(), std::move(gens));
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int d, int k) {
    std::vector<std::vector<int>> out;
    combos(d, k, out);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& sets, const std::vector<int>& s) {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    return (int)(it - sets.begin());
}

}  // namespace

PolyMatrix koszul_differential(const Ring& ring, int d, int k) {
    if (d < 1 || k < 0 || k + 1 > d) throw std::invalid_argument("koszul differential out of range");
    if (ring.nvars() < d) throw std::invalid_argument("ring has fewer than d variables");
    auto rows = subsets_of_size(d, k);
    auto cols = subsets_of_size(d, k + 1);
    PolyMatrix m(ring, (int)rows.size(), (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c) {
        const auto& T = cols[(std::size_t)c];
        for (int t = 0; t < (int)T.size(); ++t) {
            std::vector<int> S;
            for (int u = 0; u < (int)T.size(); ++u)
                if (u != t) S.push_back(T[(std::size_t)u]);
            int r = subset_index(rows, S);
            Polynomial z = Polynomial::variable(ring, T[(std::size_t)t]);
            m.at(r, c) = (t % 2 == 0) ? z : -z;
        }
    }
    return m;
}

PolyMatrix koszul_matrix(const Ring& ring, int d, int i) {
    if (i < 0 || i > d - 2) throw std::invalid_argument("koszul_matrix requires 0 <= i <= d-2");
    return koszul_differential(ring, d, i + 1);
}

FPModule omega_presented(const Ring& ring, int d, int i) {
    PolyMatrix rel = koszul_matrix(ring, d, i);
    auto gens = subsets_of_size(d, i + 1);
    std::vector<std::string> labels;
    for (const auto& s : gens) {
        std::string l = "e";
        for (int v : s) l += "_" + std::to_string(v + 1);
        labels.push_back(l);
    }
    return FPModule(ring, rel.rows(), std::move(rel), std::move(labels));
}

SubmodulePresentation omega_module(const Ring& ring, int d, int i) {
    FPModule mod = omega_presented(ring, d, i);
    PolyMatrix emb = koszul_differential(ring, d, i);
    std::vector<FreeElement> embedding;
    for (int c = 0; c < emb.cols(); ++c) embedding.push_back(emb.col(c));
    return SubmodulePresentation{std::move(mod), std::move(embedding)};
}

GsReport check_Gs(const FPModule& N, int s) {
    GsReport rep;
    rep.rank = N.rank();
    if (s >= 0) rep.s = s;
    int n = N.n_generators();
    rep.holds = true;
    int jmax = s < 0 ? n - rep.rank : s - 1;
    for (int j = 1; j <= jmax; ++j) {
        int idx = j + rep.rank - 1;
        if (idx >= n) break;  // Fitting ideal is the unit ideal from here on
        HeightReport h = dimension(fitting_ideal(N.relations(), idx));
        int have = h.height ? *h.height : 1 << 20;
        GsRow row{j, idx, h, j + 1, have >= j + 1};
        rep.holds = rep.holds && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ExtReport ext_vanishes(const FPModule& M, int i_lo, int i_hi) {
    const Ring& ring = M.ring();
    if (ring.has_quotient())
        throw std::invalid_argument("ext_vanishes requires a polynomial ring without quotient");
    if (i_lo < 1 || i_hi < i_lo) throw std::invalid_argument("bad Ext range");
    // Free resolution F_0 <- F_1 <- ... by iterated syzygies of columns.
    std::vector<PolyMatrix> d;  // d[k] : F_{k+1} -> F_k
    std::vector<int> ranks{M.n_generators()};
    d.push_back(M.relations());
    ranks.push_back(M.relations().cols());
    int cap = ring.nvars() + i_hi + 2;
    while ((int)d.size() < i_hi + 1) {
        if ((int)d.size() > cap) throw ResourceError("free resolution length cap exceeded");
        const PolyMatrix& last = d.back();
        if (last.cols() == 0) {
            d.push_back(PolyMatrix(ring, 0, 0));
            ranks.push_back(0);
            continue;
        }
        std::vector<FreeElement> cols;
        for (int j = 0; j < last.cols(); ++j) cols.push_back(last.col(j));
        SyzygyResult syz = syzygies(ring, cols);
        PolyMatrix next = matrix_from_columns(ring, last.cols(), syz.generators_of_kernel);
        d.push_back(next);
        ranks.push_back(next.cols());
    }
    ExtReport rep;
    for (int i = i_lo; i <= i_hi; ++i) {
        int mi = ranks[(std::size_t)i];
        if (mi == 0) {
            rep.vanishes.push_back({i, true});
            continue;
        }
        // image of d_i^T = row span of d[i-1]; kernel of d_{i+1}^T = syzygies
        // of the rows of d[i] (everything when F_{i+1} = 0).
        std::vector<FreeElement> image_gens;
        for (int r = 0; r < d[(std::size_t)(i - 1)].rows(); ++r)
            image_gens.push_back(d[(std::size_t)(i - 1)].row(r));
        GroebnerBasis image_gb = groebner(ring, image_gens, mi);
        std::vector<FreeElement> kernel_gens;
        const PolyMatrix& di = d[(std::size_t)i];
        if (di.cols() == 0) {
            for (int k = 0; k < mi; ++k) kernel_gens.push_back(FreeElement::unit(ring, mi, k));
        } else {
            std::vector<FreeElement> rows;
            for (int r = 0; r < di.rows(); ++r) rows.push_back(di.row(r));
            // rows live in R^{cols(di)}; syzygies of rows of d_{i+1}... the
            // kernel of v -> v * d_i is the syzygy module of d_i's rows.
            SyzygyResult syz = syzygies(ring, rows);
            kernel_gens = syz.generators_of_kernel;
        }
        bool vanish = true;
        for (const auto& kgen : kernel_gens)
            if (!is_member(image_gb, kgen)) {
                vanish = false;
                break;
            }
        rep.vanishes.push_back({i, vanish});
    }
    return rep;
}

GenericOrderIdealReport generic_order_ideal_symbolic(const FPModule& N) {
    const Ring& R = N.ring();
    int n = N.n_generators();
    auto znames = fresh_var_names(R, "Z", n);
    Ring RZ = extend_ring(R, R.nvars(), znames, std::vector<long>((std::size_t)n, 1), R.order());
    std::vector<int> up((std::size_t)R.nvars());
    for (int i = 0; i < R.nvars(); ++i) up[(std::size_t)i] = i;
    PolyMatrix rel(RZ, n, N.relations().cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N.relations().cols(); ++j)
            rel.at(i, j) = transport_poly(N.relations().at(i, j), RZ, up);
    FPModule NZ(RZ, n, std::move(rel));
    FreeElement y(RZ, n);
    for (int i = 0; i < n; ++i) y[i] = Polynomial::variable(RZ, R.nvars() + i);
    GenericOrderIdealReport rep;
    rep.symbolic = true;
    rep.ideal = order_ideal(NZ, y, OrderIdealRoute::dual_kernel).ideal;
    HeightReport h = dimension(rep.ideal);
    rep.max_height = h.height ? *h.height : RZ.nvars();
    rep.heights.push_back(std::move(h));
    return rep;
}

GenericOrderIdealReport generic_order_ideal_random(const FPModule& N, int trials, Rng& rng) {
    const Ring& R = N.ring();
    const Field& F = R.field();
    int n = N.n_generators();
    GenericOrderIdealReport rep;
    rep.symbolic = false;
    rep.max_height = -1;
    for (int t = 0; t < trials; ++t) {
        FreeElement x(R, n);
        for (int i = 0; i < n; ++i) x[i] = Polynomial::constant(R, rng.scalar(F));
        Ideal oi = order_ideal(N, x, OrderIdealRoute::dual_kernel).ideal;
        HeightReport h = dimension(oi);
        h.probabilistic = true;
        h.prime = F.characteristic();
        h.trials = trials;
        int ht = h.height ? *h.height : R.nvars();
        if (ht > rep.max_height) {
            rep.max_height = ht;
            rep.ideal = std::move(oi);
        }
        rep.heights.push_back(std::move(h));
    }
    return rep;
}

bool same_relation_module(const FPModule& a, const FPModule& b) {
    if (a.n_generators() != b.n_generators()) return false;
    const Ring& ring = a.ring();
    std::vector<FreeElement> acols, bcols;
    for (int j = 0; j < a.relations().cols(); ++j) acols.push_back(a.relations().col(j));
    for (int j = 0; j < b.relations().cols(); ++j) bcols.push_back(b.relations().col(j));
    GroebnerBasis ga = groebner(ring, acols, a.n_generators());
    GroebnerBasis gb = groebner(ring, bcols, b.n_generators());
    for (const auto& v : acols)
        if (!is_member(gb, v)) return false;
    for (const auto& v : bcols)
        if (!is_member(ga, v)) return false;
    return true;
}

}  // namespace oideal
