#ifndef OIDEAL_IDEAL_HPP
#define OIDEAL_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "oideal/groebner.hpp"
#include "oideal/poly.hpp"

namespace oideal {

/// Krull dimension / height report. height is nullopt for the unit ideal
/// (printed "unit"); in quotient mode heights are taken in R/quotient.
struct HeightReport {
    int dim_quotient = 0;          // dim of R/I (or (R/Q)/I); -1 for the unit ideal
    std::optional<int> height;     // nullopt = unit ideal sentinel
    bool probabilistic = false;
    std::uint32_t prime = 0;       // field characteristic used, when probabilistic
    int trials = 0;

    std::string height_str() const { return height ? std::to_string(*height) : "unit"; }
};

/// Finitely generated ideal with a cached reduced Groebner basis. In quotient
/// mode every computation adjoins the quotient generators, so the ideal is
/// understood in R/quotient.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring ring, std::vector<Polynomial> gens);

    static Ideal zero(const Ring& r) { return Ideal(r, {}); }
    static Ideal unit(const Ring& r) { return Ideal(r, {Polynomial::constant(r, 1)}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced Groebner basis (quotient generators adjoined); write-once cache.
    const GroebnerBasis& basis() const;

    bool contains(const Polynomial& f) const;
    bool is_unit() const { return basis().contains_unit(); }
    bool is_zero_ideal() const;

    std::vector<std::string> generator_strings() const;

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
    mutable std::shared_ptr<std::mutex> gb_mutex_ = std::make_shared<std::mutex>();
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int e);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Polynomial& b);
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
Ideal ideal_saturate(const Ideal& a, const Ideal& b);

/// Equality as ideals (mutual membership of generators).
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_subset(const Ideal& a, const Ideal& b);  // a subseteq b

/// f in sqrt(I), by the auxiliary-variable trick: 1 in I + (1 - w f) in R[w].
bool radical_member(const Polynomial& f, const Ideal& I);
/// Radical comparison of finitely generated ideals via mutual radical
/// membership of generators.
bool radical_equal(const Ideal& a, const Ideal& b);

/// dim(R/I) combinatorially from the leading-term ideal of a Groebner basis
/// (largest independent variable subset); heights follow the catenary
/// convention ht(I) = dim(R) - dim(R/I), with the quotient's own height
/// subtracted in quotient mode.
HeightReport dimension(const Ideal& I);

struct ReductionResult {
    bool confirmed = false;
    int n = -1;      // least n with J*I^n = I^{n+1} when confirmed
    int cap = 0;     // n_max used
};

/// Semidecision: Reduction(n) for the least n <= n_max with J*I^n = I^{n+1}
/// (mutual membership of generator products), NotConfirmed otherwise.
/// Throws std::invalid_argument when J is not contained in I.
ReductionResult is_reduction(const Ideal& J, const Ideal& I, int n_max = 6);

}  // namespace oideal

#endif
