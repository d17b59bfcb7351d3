#include "oideal/rng.hpp"

#include <functional>

namespace oideal {

Rng Rng::for_label(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return Rng(seed ^ h);
}

long Rng::integer(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(eng_);
}

Scalar Rng::scalar(const Field& f) {
    if (f.kind() == Field::Kind::rationals) return f.from_int(integer(-10000, 10000));
    return f.from_int(integer(0, (long)f.characteristic() - 1));
}

Scalar Rng::nonzero_scalar(const Field& f) {
    for (;;) {
        Scalar s = scalar(f);
        if (!f.is_zero(s)) return s;
    }
}

namespace {

void monomials_of_degree(int nvars, int deg, Expvec& cur, int at, std::vector<Expvec>& out) {
    if (at == nvars - 1) {
        cur[(std::size_t)at] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur[(std::size_t)at] = e;
        monomials_of_degree(nvars, deg - e, cur, at + 1, out);
    }
}

}  // namespace

Polynomial Rng::random_form(const Ring& r, int degree) {
    std::vector<Expvec> monos;
    Expvec cur((std::size_t)r.nvars(), 0);
    monomials_of_degree(r.nvars(), degree, cur, 0, monos);
    std::vector<Term> terms;
    for (auto& m : monos) {
        Scalar c = scalar(r.field());
        if (!r.field().is_zero(c)) terms.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial(r, std::move(terms));
}

Polynomial Rng::random_monomial(const Ring& r, int max_degree) {
    Expvec e((std::size_t)r.nvars(), 0);
    int deg = (int)integer(0, max_degree);
    for (int i = 0; i < deg; ++i) e[(std::size_t)integer(0, r.nvars() - 1)] += 1;
    return Polynomial::monomial(r, std::move(e), r.field().one());
}

Polynomial Rng::random_poly(const Ring& r, int max_degree) {
    int nterms = (int)integer(1, 4);
    Polynomial p(r);
    for (int i = 0; i < nterms; ++i) {
        Polynomial m = random_monomial(r, max_degree);
        p = p + Polynomial::constant(r, nonzero_scalar(r.field())) * m;
    }
    return p;
}

}  // namespace oideal
