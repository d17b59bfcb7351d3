#ifndef OIDEAL_FIELD_HPP
#define OIDEAL_FIELD_HPP

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <variant>

namespace oideal {

/// Exact field element: rational (arbitrary precision, lowest terms) or a
/// residue in [0,p) of a prime field. Which alternative is active is fixed
/// by the owning Field.
using Scalar = std::variant<mpq_class, std::uint32_t>;

/// Coefficient field: QQ or GF(p) with p prime, p < 2^31.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(std::uint32_t p);  // throws std::invalid_argument if p is not prime

    Kind kind() const { return kind_; }
    /// 0 for QQ, p for GF(p).
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    /// Parse an integer or fraction literal ("7", "-3/4"); reduced mod p for GF(p).
    Scalar from_string(const std::string& s) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    /// Bit size of the largest of numerator/denominator (1 for GF(p)); used by
    /// the coefficient blow-up guard.
    long bit_size(const Scalar& a) const;

    std::string str(const Scalar& a) const;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace oideal

#endif
