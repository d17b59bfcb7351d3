#ifndef OIDEAL_FPMODULE_HPP
#define OIDEAL_FPMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "oideal/ideal.hpp"

namespace oideal {

/// Finitely presented module: generator count plus a relation matrix whose
/// columns generate the relation module. In quotient mode the quotient
/// relations are implicit. Rank (when the base is a domain) is generator
/// count minus the relation matrix rank over the fraction field.
class FPModule {
public:
    FPModule() = default;
    FPModule(Ring ring, int n_generators, PolyMatrix relations,
             std::vector<std::string> labels = {});

    static FPModule free_module(const Ring& r, int n);

    const Ring& ring() const { return ring_; }
    int n_generators() const { return n_; }
    const PolyMatrix& relations() const { return rel_; }
    const std::vector<std::string>& labels() const { return labels_; }

    int rank() const;  // over Frac(R/quotient); quotient assumed prime

private:
    Ring ring_;
    int n_ = 0;
    PolyMatrix rel_;
    std::vector<std::string> labels_;
};

/// Rank of a polynomial matrix over the fraction field of R/quotient
/// (fraction-free Bareiss elimination; zero tests are normal forms mod the
/// quotient ideal).
int rank_over_fraction_field(const PolyMatrix& A);

/// Present a submodule of a free module on its given generators: relations
/// are their syzygies. The generators double as the embedding.
struct SubmodulePresentation {
    FPModule module;
    std::vector<FreeElement> embedding;
};
SubmodulePresentation present_submodule(const Ring& ring, const std::vector<FreeElement>& gens,
                                        std::vector<std::string> labels = {});
SubmodulePresentation present_ideal_as_module(const Ideal& I);

/// Split off relation columns with unit-constant pivot entries until every
/// entry lies in the graded maximal ideal; the result has mu(N) generators.
/// Rejects entries mixing a nonzero constant with higher-order terms.
FPModule minimalize(const FPModule& N);

struct PerpResult {
    FPModule perp;                       // presented on generators x_i-perp
    std::vector<FreeElement> embedding;  // rows of the input presentation, in R^m
};

struct PerpOptions {
    bool minimalize_first = true;  // the perpendicular-module convention
};

/// Perpendicular module: cokernel of the dual of the presentation surjection.
/// Presented on x_i-perp with relation matrix the coordinate matrix of the
/// syzygies of the rows of the input presentation; the rows themselves embed
/// the result into R^m.
PerpResult perpendicular(const FPModule& N, const PerpOptions& opts = {});

enum class OrderIdealRoute { row_ideal, dual_kernel, both };

struct OrderIdealResult {
    Ideal ideal;
    OrderIdealRoute route;
    std::string element_description;
};

/// Order ideal N*(x) = { f(x) : f in Hom(N, R) } for x given by a coefficient
/// vector over N's generators. row_ideal appends x as an extra generator and
/// reads off its row in the perpendicular presentation; dual_kernel computes
/// Hom(N, R) as the kernel of the transposed presentation and collects the
/// x-coordinates of its generators. Route `both` asserts the two ideals are
/// equal (mutual membership) and returns them.
OrderIdealResult order_ideal(const FPModule& N, const FreeElement& x,
                             OrderIdealRoute route = OrderIdealRoute::both);

/// Generators of Hom(N, R) as vectors of values on N's generators.
std::vector<FreeElement> dual_generators(const FPModule& N);

/// Fitting ideal Fitt_j of the cokernel of A (n = row count = generator
/// count): ideal of (n-j)-minors; the unit ideal when n - j <= 0 and the zero
/// ideal when n - j exceeds the matrix size.
Ideal fitting_ideal(const PolyMatrix& A, int j);

/// ann(M/U) = U :_R M for U spanned by coefficient vectors over M's
/// generators; intersection over generators of the per-generator colon,
/// each by module elimination.
Ideal module_colon(const std::vector<FreeElement>& U, const FPModule& M);

/// Trace ideal: the ideal of all coordinates of the generators of Hom(N, R);
/// equals the sum of the order ideals of any generating set.
Ideal trace_ideal(const FPModule& N);

/// Koszul differential wedge^{k+1} R^d -> wedge^k R^d on z_1..z_d; rows and
/// columns indexed by sorted index sets in lexicographic order, sign
/// convention (-1)^position. koszul_matrix(d, i) is the presentation
/// wedge^{i+2} -> wedge^{i+1} of the i-th syzygy module of the maximal ideal.
PolyMatrix koszul_differential(const Ring& ring, int d, int k);
PolyMatrix koszul_matrix(const Ring& ring, int d, int i);

/// Omega^i, the i-th syzygy module of (z_1,...,z_d), with its embedding into
/// wedge^i R^d given by the columns of the i-th differential.
SubmodulePresentation omega_module(const Ring& ring, int d, int i);
FPModule omega_presented(const Ring& ring, int d, int i);

struct GsRow {
    int j;
    int fitting_index;
    HeightReport height;
    int required;
    bool ok;
};

struct GsReport {
    int rank = 0;
    std::optional<int> s;  // nullopt = G_infinity
    bool holds = false;
    std::vector<GsRow> rows;
};

/// G_s via Fitting-ideal heights: G_s holds iff ht(Fitt_{j+r-1}(N)) >= j+1
/// for 1 <= j <= s-1 (indices past the generator count give the unit ideal
/// and hold trivially). s < 0 means G_infinity.
GsReport check_Gs(const FPModule& N, int s);

struct ExtReport {
    std::vector<std::pair<int, bool>> vanishes;  // (i, Ext^i(M,R) == 0)
};

/// Ext^i(M, R) vanishing from a free resolution by iterated syzygies;
/// polynomial rings only.
ExtReport ext_vanishes(const FPModule& M, int i_lo, int i_hi);

/// Relation submodules (= column spans, quotient relations included) equal as
/// submodules of R^n.
bool same_relation_module(const FPModule& a, const FPModule& b);

class Rng;

struct GenericOrderIdealReport {
    Ideal ideal;                        // symbolic ideal, or the best random run
    std::vector<HeightReport> heights;  // one per random trial
    int max_height = 0;
    bool symbolic = false;
};

/// Order ideal of the generic combination y = sum Z_i x_i over R[Z_1..Z_n]
/// (no localization; heights are taken in R[Z]).
GenericOrderIdealReport generic_order_ideal_symbolic(const FPModule& N);

/// Random specialization of the generic combination: `trials` independent
/// scalar draws (QQ: integers in [-10^4, 10^4]; GF(p): uniform); returns all
/// heights seen and the run achieving the maximum.
GenericOrderIdealReport generic_order_ideal_random(const FPModule& N, int trials, Rng& rng);

}  // namespace oideal

#endif
