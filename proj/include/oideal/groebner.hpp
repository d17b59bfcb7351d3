#ifndef OIDEAL_GROEBNER_HPP
#define OIDEAL_GROEBNER_HPP

#include <chrono>
#include <memory>
#include <optional>
#include <vector>

#include "oideal/poly.hpp"

namespace oideal {

/// Structured resource failure: a guard tripped, never a wrong answer.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Guards for the Buchberger loop. Zero/negative means unlimited.
struct Limits {
    long max_pairs = 4'000'000;
    long max_basis = 200'000;
    long max_coeff_bits = 0;
    long max_weighted_degree = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_deadline() const;
};

Limits& default_limits();

namespace detail {
struct VecPoly;  // flat engine representation of a free-module element
}

/// Reduced, monic Groebner basis of a submodule of R^ambient_rank (ideal case:
/// rank 1). If the ring has a quotient, its generators times each unit vector
/// were adjoined before computation, so normal forms are canonical in the
/// quotient ring.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const Ring& ring() const { return ring_; }
    int ambient_rank() const { return ambient_; }
    const ModuleOrder& order() const { return order_; }
    const std::vector<FreeElement>& elements() const { return elems_; }
    bool contains_unit() const;  // rank-1 case: basis == {1}

    const std::vector<detail::VecPoly>& raw() const { return *raw_; }

    static GroebnerBasis from_raw(Ring ring, int ambient, ModuleOrder order,
                                  std::vector<detail::VecPoly> raw);

private:
    Ring ring_;
    int ambient_ = 1;
    ModuleOrder order_;
    std::vector<FreeElement> elems_;
    std::shared_ptr<const std::vector<detail::VecPoly>> raw_;
};

struct GroebnerOptions {
    PositionRule rule = PositionRule::position_over_term;
    bool adjoin_quotient = true;
    const Limits* limits = nullptr;
};

GroebnerBasis groebner(const Ring& ring, const std::vector<FreeElement>& vectors, int ambient_rank,
                       const GroebnerOptions& opts = {});
GroebnerBasis groebner_ideal(const Ring& ring, const std::vector<Polynomial>& gens,
                             const GroebnerOptions& opts = {});

FreeElement normal_form(const GroebnerBasis& gb, const FreeElement& v);
Polynomial normal_form(const GroebnerBasis& gb, const Polynomial& p);
bool is_member(const GroebnerBasis& gb, const FreeElement& v);
bool is_member(const GroebnerBasis& gb, const Polynomial& p);

/// Elements of the basis free of the first k ring variables; gb must have been
/// computed under elim(k) (or lex). These generate the elimination submodule.
std::vector<FreeElement> eliminate(const GroebnerBasis& gb, int k);

struct SyzygyResult {
    std::vector<FreeElement> generators_of_kernel;  // in R^s, s = number of input vectors
};

/// Generators of the full syzygy module of the given vectors. With a ring
/// quotient, the quotient relations are adjoined so the kernel is taken over
/// R/quotient.
SyzygyResult syzygies(const Ring& ring, const std::vector<FreeElement>& vectors,
                      const Limits* limits = nullptr);
SyzygyResult syzygies_of_polys(const Ring& ring, const std::vector<Polynomial>& polys,
                               const Limits* limits = nullptr);

/// Write v as a combination of the given vectors (mod the ring quotient);
/// nullopt when v is not in the submodule they generate.
std::optional<std::vector<Polynomial>> lift_through(const Ring& ring,
                                                    const std::vector<FreeElement>& vectors,
                                                    const FreeElement& v);

class Ideal;

/// Defining ideal of the image of the ring map source -> target sending the
/// i-th source variable to images[i]; computed as (graph ideal) intersected
/// with the source ring, by elimination.
std::vector<Polynomial> kernel_of_map(const Ring& source, const Ring& target,
                                      const std::vector<Polynomial>& images,
                                      const Limits* limits = nullptr);

}  // namespace oideal

#endif
