#include "oideal/ideal.hpp"

#include <algorithm>

namespace oideal {

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        check_same_ring(g.ring(), ring_, "ideal construction");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::basis() const {
    std::lock_guard<std::mutex> lock(*gb_mutex_);
    if (!gb_) gb_ = std::make_shared<const GroebnerBasis>(groebner_ideal(ring_, gens_));
    return *gb_;
}

bool Ideal::contains(const Polynomial& f) const { return is_member(basis(), f); }

bool Ideal::is_zero_ideal() const { return basis().elements().empty(); }

std::vector<std::string> Ideal::generator_strings() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "ideal product");
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int e) {
    if (e < 0) throw std::invalid_argument("negative ideal power");
    Ideal r = Ideal::unit(a.ring());
    for (int i = 0; i < e; ++i) r = ideal_product(r, a);
    return r;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "ideal intersection");
    const Ring& R = a.ring();
    // t-homogenization trick: (t*a + (1-t)*b) cap R, eliminating t.
    auto tnames = fresh_var_names(R, "t", 1);
    Ring big = extend_ring(R, 0, tnames, {1}, OrderSpec{OrderKind::elim, 1});
    std::vector<int> up((std::size_t)R.nvars());
    for (int i = 0; i < R.nvars(); ++i) up[(std::size_t)i] = i + 1;
    Polynomial t = Polynomial::variable(big, 0);
    Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * transport_poly(f, big, up));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * transport_poly(g, big, up));
    GroebnerBasis gb = groebner_ideal(big, gens);
    std::vector<int> down((std::size_t)big.nvars(), -1);
    for (int i = 0; i < R.nvars(); ++i) down[(std::size_t)(i + 1)] = i;
    std::vector<Polynomial> out;
    for (const auto& e : eliminate(gb, 1)) out.push_back(transport_poly(e[0], R, down));
    return Ideal(R, std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& b) {
    check_same_ring(a.ring(), b.ring(), "ideal quotient");
    if (b.is_zero()) return Ideal::unit(a.ring());
    // a : b = first syzygy coordinates of (b, gens a).
    std::vector<FreeElement> vecs;
    vecs.push_back(FreeElement(a.ring(), {b}));
    for (const auto& g : a.generators()) vecs.push_back(FreeElement(a.ring(), {g}));
    SyzygyResult syz = syzygies(a.ring(), vecs);
    std::vector<Polynomial> out;
    for (const auto& s : syz.generators_of_kernel)
        if (!s[0].is_zero()) out.push_back(s[0]);
    if (out.empty() && a.generators().empty()) return Ideal::zero(a.ring());
    return Ideal(a.ring(), std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring(), "ideal quotient");
    if (b.generators().empty()) return Ideal::unit(a.ring());
    Ideal acc = ideal_quotient(a, b.generators()[0]);
    for (std::size_t i = 1; i < b.generators().size(); ++i)
        acc = ideal_intersect(acc, ideal_quotient(a, b.generators()[i]));
    return acc;
}

namespace {

bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.elements().size() != b.elements().size()) return false;
    for (std::size_t i = 0; i < a.elements().size(); ++i)
        if (!(a.elements()[i] == b.elements()[i])) return false;
    return true;
}

}  // namespace

Ideal ideal_saturate(const Ideal& a, const Ideal& b) {
    Ideal cur = a;
    for (;;) {
        Ideal next = ideal_quotient(cur, b);
        if (same_basis(next.basis(), cur.basis())) return cur;
        cur = std::move(next);
    }
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_subset(a, b) && ideal_subset(b, a); }

bool radical_member(const Polynomial& f, const Ideal& I) {
    check_same_ring(f.ring(), I.ring(), "radical membership");
    if (f.is_zero()) return true;
    const Ring& R = I.ring();
    auto wnames = fresh_var_names(R, "w", 1);
    Ring big = extend_ring(R, R.nvars(), wnames, {1}, R.order());
    std::vector<int> up((std::size_t)R.nvars());
    for (int i = 0; i < R.nvars(); ++i) up[(std::size_t)i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(transport_poly(g, big, up));
    Polynomial w = Polynomial::variable(big, R.nvars());
    gens.push_back(Polynomial::constant(big, 1) - w * transport_poly(f, big, up));
    return groebner_ideal(big, gens).contains_unit();
}

bool radical_equal(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.generators())
        if (!radical_member(g, b)) return false;
    for (const auto& g : b.generators())
        if (!radical_member(g, a)) return false;
    return true;
}

namespace {

/// Largest subset of variables none of whose generators' lead supports is
/// contained in it; the classical combinatorial dimension of a monomial ideal.
int independent_set_dimension(const std::vector<std::uint32_t>& supports, int nvars) {
    if (nvars > 26) throw ResourceError("too many variables for combinatorial dimension");
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        bool ok = true;
        for (auto s : supports)
            if ((s & ~mask) == 0) {
                ok = false;
                break;
            }
        if (ok) best = pc;
    }
    return best;
}

}  // namespace

HeightReport dimension(const Ideal& I) {
    const Ring& R = I.ring();
    const GroebnerBasis& gb = I.basis();
    HeightReport rep;
    if (gb.contains_unit()) {
        rep.dim_quotient = -1;
        rep.height = std::nullopt;
        return rep;
    }
    std::vector<std::uint32_t> supports;
    for (const auto& e : gb.elements()) {
        const Expvec& lm = e[0].leading_monomial();
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < lm.size(); ++i)
            if (lm[i] > 0) s |= (1u << i);
        supports.push_back(s);
    }
    int dim_poly = independent_set_dimension(supports, R.nvars());
    int htq = R.quotient_height();
    rep.dim_quotient = dim_poly;
    rep.height = (R.nvars() - htq) - dim_poly;
    return rep;
}

ReductionResult is_reduction(const Ideal& J, const Ideal& I, int n_max) {
    check_same_ring(J.ring(), I.ring(), "reduction test");
    for (const auto& g : J.generators())
        if (!I.contains(g)) throw std::invalid_argument("J is not contained in I");
    ReductionResult res;
    res.cap = n_max;
    Ideal In = Ideal::unit(I.ring());  // I^n, starting at n = 0
    for (int n = 0; n <= n_max; ++n) {
        Ideal JIn = ideal_product(J, In);
        Ideal In1 = ideal_product(I, In);
        const GroebnerBasis& gb = JIn.basis();
        bool ok = true;
        for (const auto& g : In1.generators())
            if (!is_member(gb, g)) {
                ok = false;
                break;
            }
        if (ok) {
            res.confirmed = true;
            res.n = n;
            return res;
        }
        In = std::move(In1);
    }
    return res;
}

// Quotient-ideal facts cached on the ring; defined here so the ring layer
// stays below the Groebner layer.
std::shared_ptr<const GroebnerBasis> Ring::quotient_basis() const {
    const RingData* d = data();
    std::lock_guard<std::mutex> lock(d->cache_mutex);
    if (!d->quotient_gb) {
        // Basis of the quotient ideal itself, held over this (quotiented)
        // ring so normal forms compose directly.
        std::vector<Polynomial> gens;
        std::vector<int> idmap((std::size_t)nvars());
        for (int i = 0; i < nvars(); ++i) idmap[(std::size_t)i] = i;
        for (const auto& q : d->quotient) gens.push_back(transport_poly(q, *this, idmap));
        GroebnerOptions opts;
        opts.adjoin_quotient = false;
        d->quotient_gb = std::make_shared<const GroebnerBasis>(groebner_ideal(*this, gens, opts));
    }
    return d->quotient_gb;
}

int Ring::quotient_height() const {
    if (!has_quotient()) return 0;
    const RingData* d = data();
    {
        std::lock_guard<std::mutex> lock(d->cache_mutex);
        if (d->quotient_ht) return *d->quotient_ht;
    }
    std::vector<Polynomial> gens;
    std::vector<int> idmap((std::size_t)nvars());
    for (int i = 0; i < nvars(); ++i) idmap[(std::size_t)i] = i;
    for (const auto& q : d->quotient) gens.push_back(transport_poly(q, without_quotient(), idmap));
    HeightReport rep = dimension(Ideal(without_quotient(), std::move(gens)));
    int ht = rep.height ? *rep.height : nvars();
    std::lock_guard<std::mutex> lock(d->cache_mutex);
    d->quotient_ht = ht;
    return ht;
}

}  // namespace oideal
