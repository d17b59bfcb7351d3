#ifndef OIDEAL_RING_HPP
#define OIDEAL_RING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "oideal/field.hpp"
#include "oideal/order.hpp"

namespace oideal {

class Polynomial;
class GroebnerBasis;
struct RingData;

/// Polynomial ring over an exact field, with per-variable positive weights,
/// a monomial order, and an optional prime quotient ideal. Immutable and
/// cheaply copyable (shared representation).
class Ring {
public:
    Ring() = default;

    static Ring make(Field field, std::vector<std::string> vars, std::vector<long> weights = {},
                     OrderSpec order = {}, std::vector<Polynomial> quotient = {});

    const Field& field() const;
    const std::vector<std::string>& vars() const;
    int nvars() const;
    const std::vector<long>& weights() const;
    const OrderSpec& order() const;
    const std::vector<Polynomial>& quotient() const;  // generators over the quotient-free ring
    bool has_quotient() const;

    /// Same ring structurally except for the quotient, which is compared as a
    /// raw generator list.
    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    /// Index of a variable name, or -1.
    int var_index(const std::string& name) const;

    /// Structural copy with a different order.
    Ring with_order(OrderSpec ord) const;
    /// Structural copy without the quotient.
    Ring without_quotient() const;

    /// Height of the quotient ideal in the ambient polynomial ring (0 when no
    /// quotient); computed once and cached.
    int quotient_height() const;
    /// Reduced Groebner basis of the quotient ideal extended to this ring's
    /// variables (empty basis when no quotient); cached.
    std::shared_ptr<const GroebnerBasis> quotient_basis() const;

    std::string to_string() const;

    const RingData* data() const { return d_.get(); }
    explicit Ring(std::shared_ptr<const RingData> d) : d_(std::move(d)) {}

private:
    std::shared_ptr<const RingData> d_;
};

struct RingData {
    Field field = Field::rationals();
    std::vector<std::string> vars;
    std::vector<long> weights;
    OrderSpec order;
    std::vector<Polynomial> quotient;

    mutable std::mutex cache_mutex;
    mutable std::shared_ptr<const GroebnerBasis> quotient_gb;
    mutable std::optional<int> quotient_ht;

    RingData();
    ~RingData();
};

/// New ring with extra variables spliced in at `at` (existing polynomials must
/// be transported with `transport_poly`).
Ring extend_ring(const Ring& base, int at, const std::vector<std::string>& new_vars,
                 const std::vector<long>& new_weights, OrderSpec order, bool keep_quotient = true);

/// Fresh variable names name0..name{n-1} (with underscores appended on
/// collision with existing ring variables).
std::vector<std::string> fresh_var_names(const Ring& base, const std::string& stem, int count);

}  // namespace oideal

#endif
