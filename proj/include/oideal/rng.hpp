#ifndef OIDEAL_RNG_HPP
#define OIDEAL_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

#include "oideal/poly.hpp"

namespace oideal {

/// Seeded deterministic RNG for random scalars, elements and instances.
/// QQ draws integers uniformly from [-10^4, 10^4]; GF(p) draws uniformly
/// from the field.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Sub-generator with a label-derived seed; keeps scenarios independent
    /// of each other and of execution order.
    static Rng for_label(std::uint64_t seed, const std::string& label);

    std::uint64_t raw() { return eng_(); }
    long integer(long lo, long hi);
    Scalar scalar(const Field& f);
    Scalar nonzero_scalar(const Field& f);
    Polynomial random_form(const Ring& r, int degree);        // homogeneous, dense support
    Polynomial random_poly(const Ring& r, int max_degree);    // inhomogeneous, sparse
    Polynomial random_monomial(const Ring& r, int max_degree);

private:
    std::mt19937_64 eng_;
};

}  // namespace oideal

#endif
