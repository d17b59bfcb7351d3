#include "oideal/detail/vecpoly.hpp"

#include <algorithm>
#include <numeric>

namespace oideal::detail {

namespace {

constexpr std::int32_t kMaxExp = 1 << 24;

Expvec exp_add(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = (std::int64_t)a[i] + b[i];
        if (s > kMaxExp) throw std::overflow_error("monomial exponent overflow");
        r[i] = (std::int32_t)s;
    }
    return r;
}

bool divides(const MTerm& d, const MTerm& m) {
    if (d.pos != m.pos) return false;
    for (std::size_t i = 0; i < d.exps.size(); ++i)
        if (d.exps[i] > m.exps[i]) return false;
    return true;
}

}  // namespace

VecPoly to_vecpoly(const EngineContext& cx, const FreeElement& v) {
    VecPoly out;
    for (int p = 0; p < v.rank(); ++p)
        for (const auto& t : v[p].terms()) out.terms.push_back(MTerm{p, t.exps, t.coeff});
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const MTerm& a, const MTerm& b) { return cx.cmp(a, b) > 0; });
    return out;
}

VecPoly poly_to_vecpoly(const EngineContext& cx, const Polynomial& p, std::int32_t pos) {
    (void)cx;
    VecPoly out;
    for (const auto& t : p.terms()) out.terms.push_back(MTerm{pos, t.exps, t.coeff});
    return out;  // polynomial terms are already descending; one position only
}

FreeElement from_vecpoly(const Ring& ring, int rank, const VecPoly& v) {
    std::vector<std::vector<Term>> per((std::size_t)rank);
    for (const auto& t : v.terms) per[(std::size_t)t.pos].push_back(Term{t.exps, t.coeff});
    std::vector<Polynomial> coords;
    coords.reserve((std::size_t)rank);
    for (auto& ts : per) coords.push_back(Polynomial(ring, std::move(ts)));
    return FreeElement(ring, std::move(coords));
}

Polynomial poly_from_vecpoly(const Ring& ring, const VecPoly& v) {
    std::vector<Term> ts;
    for (const auto& t : v.terms) {
        if (t.pos != 0) throw std::logic_error("vecpoly is not a polynomial");
        ts.push_back(Term{t.exps, t.coeff});
    }
    return Polynomial(ring, std::move(ts));
}

void vp_add_scaled(const EngineContext& cx, VecPoly& a, const Scalar& c, const Expvec& shift,
                   const VecPoly& b) {
    const Field& F = cx.ring.field();
    if (b.is_zero() || F.is_zero(c)) return;
    std::vector<MTerm> out;
    out.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.push_back(std::move(a.terms[i++]));
            continue;
        }
        MTerm bt{b.terms[j].pos, exp_add(b.terms[j].exps, shift), Scalar{}};
        if (i == a.terms.size()) {
            Scalar cc = F.mul(c, b.terms[j].coeff);
            if (!F.is_zero(cc)) {
                bt.coeff = std::move(cc);
                out.push_back(std::move(bt));
            }
            ++j;
            continue;
        }
        int cmp = cx.cmp(a.terms[i], bt);
        if (cmp > 0) {
            out.push_back(std::move(a.terms[i++]));
        } else if (cmp < 0) {
            Scalar cc = F.mul(c, b.terms[j].coeff);
            if (!F.is_zero(cc)) {
                bt.coeff = std::move(cc);
                out.push_back(std::move(bt));
            }
            ++j;
        } else {
            Scalar cc = F.add(a.terms[i].coeff, F.mul(c, b.terms[j].coeff));
            if (!F.is_zero(cc)) {
                bt.coeff = std::move(cc);
                out.push_back(std::move(bt));
            }
            ++i;
            ++j;
        }
    }
    a.terms = std::move(out);
}

VecPoly vp_normal_form(const EngineContext& cx, VecPoly v, const std::vector<VecPoly>& basis) {
    const Field& F = cx.ring.field();
    VecPoly out;
    long steps = 0;
    while (!v.is_zero()) {
        if (((++steps) & 0xff) == 0 && cx.limits) cx.limits->check_deadline();
        const MTerm& lt = v.lead();
        const VecPoly* red = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && divides(g.lead(), lt)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.terms.push_back(v.terms.front());
            v.terms.erase(v.terms.begin());
            continue;
        }
        Expvec shift(lt.exps.size());
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lt.exps[i] - red->lead().exps[i];
        Scalar c = F.neg(F.div(lt.coeff, red->lead().coeff));
        vp_add_scaled(cx, v, c, shift, *red);
    }
    return out;
}

void vp_make_monic(const EngineContext& cx, VecPoly& v) {
    if (v.is_zero()) return;
    const Field& F = cx.ring.field();
    if (F.is_one(v.lead().coeff)) return;
    Scalar inv = F.inv(v.lead().coeff);
    for (auto& t : v.terms) t.coeff = F.mul(inv, t.coeff);
}

void vp_normalize_primitive(const EngineContext& cx, VecPoly& v) {
    if (v.is_zero()) return;
    const Field& F = cx.ring.field();
    if (F.kind() == Field::Kind::prime) {
        vp_make_monic(cx, v);
        return;
    }
    mpz_class den(1), num(0);
    for (const auto& t : v.terms) {
        const mpq_class& q = std::get<mpq_class>(t.coeff);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        den = den / g * q.get_den();
    }
    for (const auto& t : v.terms) {
        const mpq_class& q = std::get<mpq_class>(t.coeff);
        mpz_class scaled = q.get_num() * (den / q.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num == 0) num = 1;
    mpq_class factor(den, num);
    factor.canonicalize();
    const mpq_class& lead = std::get<mpq_class>(v.lead().coeff);
    if (sgn(lead) * sgn(factor) < 0) factor = -factor;
    for (auto& t : v.terms) {
        mpq_class c = std::get<mpq_class>(t.coeff) * factor;
        c.canonicalize();
        t.coeff = std::move(c);
    }
}

long vp_max_coeff_bits(const EngineContext& cx, const VecPoly& v) {
    long m = 0;
    for (const auto& t : v.terms) m = std::max(m, cx.ring.field().bit_size(t.coeff));
    return m;
}

namespace {

struct Pair {
    int i, j;
    std::int32_t pos;
    Expvec lcm;
    std::int64_t wdeg;
};

Expvec exp_lcm(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_divides(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool exp_coprime(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

VecPoly spair(const EngineContext& cx, const VecPoly& f, const VecPoly& g, const Expvec& lcm) {
    const Field& F = cx.ring.field();
    Expvec sf(lcm.size()), sg(lcm.size());
    for (std::size_t k = 0; k < lcm.size(); ++k) {
        sf[k] = lcm[k] - f.lead().exps[k];
        sg[k] = lcm[k] - g.lead().exps[k];
    }
    VecPoly s;
    vp_add_scaled(cx, s, g.lead().coeff, sf, f);
    vp_add_scaled(cx, s, F.neg(f.lead().coeff), sg, g);
    return s;
}

// Gebauer-Moeller pair update. The product criterion is applied only in the
// rank-one (ideal) case; it is not valid for module leads in general.
void update_pairs(const EngineContext& cx, const std::vector<VecPoly>& basis, int t,
                  std::vector<Pair>& pairs, bool rank_one) {
    const VecPoly& h = basis[(std::size_t)t];
    const MTerm& lh = h.lead();

    struct Cand {
        int i;
        Expvec lcm;
        bool keep = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
        const VecPoly& g = basis[(std::size_t)i];
        if (g.is_zero() || g.lead().pos != lh.pos) continue;
        cands.push_back(Cand{i, exp_lcm(g.lead().exps, lh.exps)});
    }
    // Becker-Weispfenning UPDATE: a candidate survives if its lead monomials
    // are coprime (it will then be discarded below) or no other surviving or
    // pending candidate's lcm divides it.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
        bool coprime = rank_one && exp_coprime(basis[(std::size_t)cands[a].i].lead().exps, lh.exps);
        bool dominated = false;
        if (!coprime) {
            for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b)
                if (exp_divides(cands[b].lcm, cands[a].lcm) && cands[b].lcm != cands[a].lcm)
                    dominated = true;
            for (const auto& k : kept)
                if (exp_divides(k.lcm, cands[a].lcm)) {
                    dominated = true;
                    break;
                }
        }
        if (!dominated) kept.push_back(cands[a]);
        cands[a].keep = !dominated;
    }
    // B criterion on old pairs.
    std::vector<Pair> surviving;
    surviving.reserve(pairs.size());
    for (auto& p : pairs) {
        const VecPoly& gi = basis[(std::size_t)p.i];
        const VecPoly& gj = basis[(std::size_t)p.j];
        bool drop = false;
        if (lh.pos == p.pos && exp_divides(lh.exps, p.lcm)) {
            Expvec li = exp_lcm(gi.lead().exps, lh.exps);
            Expvec lj = exp_lcm(gj.lead().exps, lh.exps);
            if (li != p.lcm && lj != p.lcm) drop = true;
        }
        if (!drop) surviving.push_back(std::move(p));
    }
    pairs = std::move(surviving);
    for (const auto& k : kept) {
        if (rank_one && exp_coprime(basis[(std::size_t)k.i].lead().exps, lh.exps)) continue;
        std::int64_t wd = weighted_degree(k.lcm, cx.ring.weights());
        pairs.push_back(Pair{k.i, t, lh.pos, k.lcm, wd});
    }
}

}  // namespace

std::vector<VecPoly> buchberger(const EngineContext& cx, std::vector<VecPoly> gens) {
    const Limits* lim = cx.limits;
    bool rank_one = true;
    for (const auto& g : gens)
        for (const auto& t : g.terms) rank_one = rank_one && t.pos == 0;

    std::vector<VecPoly> basis;
    std::vector<Pair> pairs;
    long processed = 0;

    auto insert = [&](VecPoly v) {
        vp_normalize_primitive(cx, v);
        if (lim) {
            lim->check_deadline();
            if (lim->max_basis > 0 && (long)basis.size() >= lim->max_basis)
                throw ResourceError("basis size limit exceeded");
            if (lim->max_coeff_bits > 0 && vp_max_coeff_bits(cx, v) > lim->max_coeff_bits)
                throw ResourceError("coefficient bit-length limit exceeded");
            if (lim->max_weighted_degree > 0 &&
                weighted_degree(v.lead().exps, cx.ring.weights()) > lim->max_weighted_degree)
                throw ResourceError("degree limit exceeded");
        }
        basis.push_back(std::move(v));
        update_pairs(cx, basis, (int)basis.size() - 1, pairs, rank_one);
    };

    for (auto& g : gens) {
        VecPoly r = vp_normal_form(cx, std::move(g), basis);
        if (!r.is_zero()) insert(std::move(r));
    }

    while (!pairs.empty()) {
        if (lim) {
            lim->check_deadline();
            if (lim->max_pairs > 0 && processed >= lim->max_pairs)
                throw ResourceError("pair count limit exceeded");
        }
        ++processed;
        // normal selection: minimal weighted lcm degree, ties by (i, j)
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.wdeg != b.wdeg ? a.wdeg < b.wdeg
                                 : (a.j != b.j ? a.j < b.j : a.i < b.i))
                best = k;
        }
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + (std::ptrdiff_t)best);
        VecPoly s = spair(cx, basis[(std::size_t)p.i], basis[(std::size_t)p.j], p.lcm);
        VecPoly r = vp_normal_form(cx, std::move(s), basis);
        if (!r.is_zero()) insert(std::move(r));
    }

    // Minimalize: drop elements whose lead is divisible by another's.
    std::vector<char> alive(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && alive[i]; ++j) {
            if (i == j || !alive[j]) continue;
            if (divides(basis[j].lead(), basis[i].lead())) {
                if (basis[i].lead().exps == basis[j].lead().exps &&
                    basis[i].lead().pos == basis[j].lead().pos && j > i)
                    continue;  // equal leads: keep the earlier one
                alive[i] = 0;
            }
        }
    }
    std::vector<VecPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) minimal.push_back(std::move(basis[i]));

    // Tail-reduce to the reduced basis (iterate to a fixpoint).
    auto same_terms = [](const VecPoly& a, const VecPoly& b) {
        return a.terms.size() == b.terms.size() &&
               std::equal(a.terms.begin(), a.terms.end(), b.terms.begin(),
                          [](const MTerm& x, const MTerm& y) {
                              return x.pos == y.pos && x.exps == y.exps && x.coeff == y.coeff;
                          });
    };
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 100) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<VecPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            VecPoly r = vp_normal_form(cx, minimal[i], others);
            if (!same_terms(r, minimal[i])) {
                changed = true;
                minimal[i] = std::move(r);
            }
        }
    }
    for (auto& g : minimal) vp_make_monic(cx, g);
    std::sort(minimal.begin(), minimal.end(),
              [&](const VecPoly& a, const VecPoly& b) { return cx.cmp(a.lead(), b.lead()) > 0; });
    return minimal;
}

}  // namespace oideal::detail
