#ifndef OIDEAL_REES_HPP
#define OIDEAL_REES_HPP

#include <optional>
#include <string>
#include <vector>

#include "oideal/fpmodule.hpp"

namespace oideal {

/// Rees algebra data for a module M given by an embedding u_1..u_n in R^m:
/// rees_ideal is the kernel of R[T] -> R[Y], T_i -> sum_j u_ij Y_j; the
/// special fiber is (rees_ideal + m R[T]) cap k[T]; the analytic spread is
/// its Krull codimension complement, dim k[T]/fiber_ideal.
struct ReesPresentation {
    Ring base;                          // R (domain)
    int ambient_rank = 0;               // m
    std::vector<FreeElement> generators;  // u_1..u_n in R^m
    Ring rees_ring;                     // R[T_1..T_n] (with the base quotient)
    Ideal rees_ideal;                   // in rees_ring
    Ring fiber_ring;                    // k[T_1..T_n]
    Ideal fiber_ideal;                  // in fiber_ring
    int analytic_spread = 0;
    int module_rank = 0;                // rank of the generator matrix over Frac
};

/// Throws std::invalid_argument for an empty generating set. The base ring
/// must be a domain (polynomial ring or prime quotient); asserts the
/// inequalities l(M) <= mu(M) and l(M) <= dim R + rank M - 1.
ReesPresentation rees_of_module(const Ring& base, const std::vector<FreeElement>& generators,
                                const Limits* limits = nullptr);
ReesPresentation rees_of_ideal(const Ideal& I, const Limits* limits = nullptr);

int analytic_spread(const ReesPresentation& rp);

struct ReductionCertificate {
    bool confirmed = false;
    int n = -1;   // degree at which U * R(M)_n = R(M)_{n+1} held
    int cap = 0;  // degree cap used
};

/// Degreewise reduction test for U inside M (both embedded in R^m): for each
/// n <= n_max compare the degree-(n+1) products of M-generators against
/// U-generator times degree-n products, in the free module of Y-monomials.
/// Semidecision: never a false positive. Throws when U is not inside M.
ReductionCertificate module_reduction_test(const Ring& base, const std::vector<FreeElement>& U,
                                           const std::vector<FreeElement>& M, int n_max = 6,
                                           const Limits* limits = nullptr);

/// Exact non-integrality certificate from degree-1 fiber data: U is a
/// reduction of M iff dim F(M)/(degree-1 images of U) = 0; a positive
/// dimension certifies that M is not integral over U. Returns the dimension
/// of the quotient fiber. U must be given by coefficient vectors over M's
/// generators with scalar (degree-0) coefficients taken mod m.
int fiber_obstruction_dimension(const ReesPresentation& rp,
                                const std::vector<std::vector<Scalar>>& u_coeff_images);

/// Lift U-vectors (in R^m) to coefficient vectors over M's generators and
/// take their scalar images mod m; building block for the fiber test.
std::vector<std::vector<Scalar>> degree_one_images(const Ring& base,
                                                   const std::vector<FreeElement>& U,
                                                   const std::vector<FreeElement>& M);

struct Thm12Report {
    int t = 0;               // mu of U as given
    int rank = 0;            // rank of M = mu_Q(M) at the zero prime
    HeightReport colon;      // ht(U :_R M)
    int bound = 0;           // max{0, t + 1 - rank}
    bool integral = false;   // U confirmed a reduction of M (fiber criterion)
    int obstruction_dim = 0; // dim F(M)/(U-images); > 0 certifies non-integral
    ReductionCertificate degreewise;
    bool vacuous = false;    // integral case: no height assertion made
    bool bound_holds = false;
};

/// Height-bound instance check: when U is certified non-integral in M (fiber
/// obstruction), assert ht(U :_R M) <= max{0, t + 1 - rank M}. Domain base
/// rings only.
Thm12Report theorem_1_2_check(const Ring& base, const std::vector<FreeElement>& M_embedding,
                              const std::vector<FreeElement>& U_vectors, int n_max = 4,
                              const Limits* limits = nullptr);

}  // namespace oideal

#endif
