#include "oideal/order.hpp"

#include <cstddef>
#include <stdexcept>

namespace oideal {

std::int64_t weighted_degree(const Expvec& e, const std::vector<long>& weights) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += (std::int64_t)e[i] * weights[i];
    return d;
}

namespace {

std::int64_t wdeg_range(const Expvec& e, const std::vector<long>& w, std::size_t lo, std::size_t hi) {
    std::int64_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += (std::int64_t)e[i] * w[i];
    return d;
}

int cmp_lex_range(const Expvec& a, const Expvec& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

// grevlex tie-break: the last nonzero entry of a-b negative means a > b.
int cmp_revlex_range(const Expvec& a, const Expvec& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex_range(const Expvec& a, const Expvec& b, const std::vector<long>& w, std::size_t lo,
                      std::size_t hi) {
    std::int64_t da = wdeg_range(a, w, lo, hi), db = wdeg_range(b, w, lo, hi);
    if (da != db) return da > db ? 1 : -1;
    return cmp_revlex_range(a, b, lo, hi);
}

}  // namespace

int cmp_exponents(const OrderSpec& ord, const std::vector<long>& weights, const Expvec& a,
                  const Expvec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vector length mismatch");
    std::size_t n = a.size();
    switch (ord.kind) {
        case OrderKind::lex:
            return cmp_lex_range(a, b, 0, n);
        case OrderKind::grlex: {
            std::int64_t da = wdeg_range(a, weights, 0, n), db = wdeg_range(b, weights, 0, n);
            if (da != db) return da > db ? 1 : -1;
            return cmp_lex_range(a, b, 0, n);
        }
        case OrderKind::grevlex:
            return cmp_grevlex_range(a, b, weights, 0, n);
        case OrderKind::elim: {
            std::size_t k = (std::size_t)ord.elim_block;
            if (k > n) throw std::invalid_argument("elimination block exceeds variable count");
            int c = cmp_grevlex_range(a, b, weights, 0, k);
            if (c != 0) return c;
            return cmp_grevlex_range(a, b, weights, k, n);
        }
    }
    return 0;
}

int cmp_module_term(const ModuleOrder& ord, const std::vector<long>& weights, std::int32_t pos_a,
                    const Expvec& a, std::int32_t pos_b, const Expvec& b) {
    if (ord.head_components >= 0) {
        bool ha = pos_a < ord.head_components, hb = pos_b < ord.head_components;
        if (ha != hb) return ha ? 1 : -1;
    }
    if (ord.rule == PositionRule::position_over_term) {
        if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;  // lower position ranks higher
        return cmp_exponents(ord.ring_order, weights, a, b);
    }
    int c = cmp_exponents(ord.ring_order, weights, a, b);
    if (c != 0) return c;
    if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;
    return 0;
}

}  // namespace oideal
