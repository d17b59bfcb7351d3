#include "oideal/chern.hpp"

#include <stdexcept>
#include <vector>

namespace oideal {

mpz_class chern_top_coefficient(int n) {
    if (n < 2) throw std::invalid_argument("chern parity requires n >= 2");
    // (1+t)^n truncated at t^n.
    std::vector<mpz_class> binom((std::size_t)n, 0);
    binom[0] = 1;
    for (int row = 1; row <= n; ++row)
        for (int k = std::min(row, n - 1); k >= 1; --k) binom[(std::size_t)k] += binom[(std::size_t)(k - 1)];
    // Multiply by (1+2t)^{-1} = sum (-2t)^k, truncating at t^n.
    std::vector<mpz_class> inv((std::size_t)n);
    mpz_class pw = 1;
    for (int k = 0; k < n; ++k) {
        inv[(std::size_t)k] = pw;
        pw *= -2;
    }
    std::vector<mpz_class> prod((std::size_t)n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j) prod[(std::size_t)(i + j)] += binom[(std::size_t)i] * inv[(std::size_t)j];
    return prod[(std::size_t)(n - 1)];
}

mpz_class chern_alternating_sum(int n) {
    if (n < 2) throw std::invalid_argument("chern parity requires n >= 2");
    mpz_class sum = 0, pw = 1;
    for (int i = 0; i <= n - 1; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)(n - 1 - i));
        sum += (i % 2 == 0 ? b : -b) * pw;
        pw *= 2;
    }
    return sum;
}

}  // namespace oideal
