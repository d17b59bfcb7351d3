#ifndef OIDEAL_ORDER_HPP
#define OIDEAL_ORDER_HPP

#include <cstdint>
#include <vector>

namespace oideal {

using Expvec = std::vector<std::int32_t>;

enum class OrderKind { lex, grlex, grevlex, elim };

/// Monomial order on a polynomial ring. Degrees are always taken with the
/// ring's variable weights, so grevlex in a weighted ring is weighted
/// grevlex. elim(k) ranks any monomial involving the first k variables above
/// any monomial in the remaining ones (block order, grevlex within blocks).
struct OrderSpec {
    OrderKind kind = OrderKind::grevlex;
    int elim_block = 0;

    bool operator==(const OrderSpec& o) const {
        return kind == o.kind && (kind != OrderKind::elim || elim_block == o.elim_block);
    }
};

enum class PositionRule { position_over_term, term_over_position };

/// Order on free-module terms (position, monomial). head_components >= 0
/// splits positions into a leading block [0, head_components) that outranks
/// the rest regardless of monomial; used for component elimination.
struct ModuleOrder {
    OrderSpec ring_order;
    PositionRule rule = PositionRule::position_over_term;
    int head_components = -1;
};

std::int64_t weighted_degree(const Expvec& e, const std::vector<long>& weights);

/// -1, 0, +1 for a < b, a == b, a > b.
int cmp_exponents(const OrderSpec& ord, const std::vector<long>& weights, const Expvec& a,
                  const Expvec& b);

int cmp_module_term(const ModuleOrder& ord, const std::vector<long>& weights, std::int32_t pos_a,
                    const Expvec& a, std::int32_t pos_b, const Expvec& b);

}  // namespace oideal

#endif
