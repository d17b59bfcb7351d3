#ifndef OIDEAL_CHERN_HPP
#define OIDEAL_CHERN_HPP

#include <gmpxx.h>

namespace oideal {

/// Coefficient of t^{n-1} in (1+t)^n / (1+2t) mod t^n over the integers
/// (geometric-series inversion); 0 for even n, 1 for odd n. Requires n >= 2.
mpz_class chern_top_coefficient(int n);

/// Closed-form cross-check: sum_{i=0}^{n-1} (-1)^i C(n, n-1-i) 2^i.
mpz_class chern_alternating_sum(int n);

}  // namespace oideal

#endif
