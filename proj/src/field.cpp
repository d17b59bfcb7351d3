#include "oideal/field.hpp"

namespace oideal {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31)) throw std::invalid_argument("field characteristic must be < 2^31");
    if (!is_prime_u32(p)) throw std::invalid_argument("non-prime modulus " + std::to_string(p));
    return Field(Kind::prime, p);
}

namespace {

std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = (std::uint64_t)a + b;
    return (std::uint32_t)(s >= p ? s - p : s);
}

std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (std::uint32_t)((std::uint64_t)a * b % p);
}

std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += p;
    return (std::uint32_t)t;
}

const mpq_class& Q(const Scalar& a) { return std::get<mpq_class>(a); }
std::uint32_t P(const Scalar& a) { return std::get<std::uint32_t>(a); }

}  // namespace

Scalar Field::zero() const {
    if (kind_ == Kind::rationals) return mpq_class(0);
    return (std::uint32_t)0;
}

Scalar Field::one() const {
    if (kind_ == Kind::rationals) return mpq_class(1);
    return (std::uint32_t)1;
}

Scalar Field::from_int(long v) const {
    if (kind_ == Kind::rationals) return mpq_class(v);
    long r = v % (long)p_;
    if (r < 0) r += p_;
    return (std::uint32_t)r;
}

Scalar Field::from_string(const std::string& s) const {
    auto slash = s.find('/');
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (kind_ == Kind::rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpz_class p(p_);
    mpz_class n = num % p; if (n < 0) n += p;
    mpz_class d = den % p; if (d < 0) d += p;
    std::uint32_t nn = (std::uint32_t)n.get_ui();
    std::uint32_t dd = (std::uint32_t)d.get_ui();
    return mulp(nn, invp(dd, p_), p_);
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == Kind::rationals) return Q(a) == 0;
    return P(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (kind_ == Kind::rationals) return Q(a) == 1;
    return P(a) == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return mpq_class(Q(a) + Q(b));
    return addp(P(a), P(b), p_);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return mpq_class(Q(a) - Q(b));
    std::uint32_t nb = P(b) == 0 ? 0 : p_ - P(b);
    return addp(P(a), nb, p_);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return mpq_class(Q(a) * Q(b));
    return mulp(P(a), P(b), p_);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) {
        if (Q(b) == 0) throw std::domain_error("division by zero");
        return mpq_class(Q(a) / Q(b));
    }
    return mulp(P(a), invp(P(b), p_), p_);
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::rationals) return mpq_class(-Q(a));
    std::uint32_t v = P(a);
    return v == 0 ? v : p_ - v;
}

Scalar Field::inv(const Scalar& a) const {
    if (kind_ == Kind::rationals) {
        if (Q(a) == 0) throw std::domain_error("division by zero");
        return mpq_class(1 / Q(a));
    }
    return invp(P(a), p_);
}

long Field::bit_size(const Scalar& a) const {
    if (kind_ == Kind::prime) return 1;
    const mpq_class& q = Q(a);
    long n = (long)mpz_sizeinbase(q.get_num_mpz_t(), 2);
    long d = (long)mpz_sizeinbase(q.get_den_mpz_t(), 2);
    return n > d ? n : d;
}

std::string Field::str(const Scalar& a) const {
    if (kind_ == Kind::rationals) {
        const mpq_class& q = Q(a);
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    return std::to_string(P(a));
}

}  // namespace oideal
