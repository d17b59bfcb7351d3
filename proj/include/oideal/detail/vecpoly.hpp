#ifndef OIDEAL_DETAIL_VECPOLY_HPP
#define OIDEAL_DETAIL_VECPOLY_HPP

#include <vector>

#include "oideal/groebner.hpp"
#include "oideal/poly.hpp"

namespace oideal::detail {

/// One term of a free-module element: position, monomial, coefficient.
struct MTerm {
    std::int32_t pos;
    Expvec exps;
    Scalar coeff;
};

/// Flat engine representation: terms sorted strictly decreasing under a
/// ModuleOrder, no zero coefficients. The engine works on these; the public
/// FreeElement/Polynomial types convert at the boundary.
struct VecPoly {
    std::vector<MTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const MTerm& lead() const { return terms.front(); }
};

struct EngineContext {
    Ring ring;
    ModuleOrder order;
    const Limits* limits;

    int cmp(const MTerm& a, const MTerm& b) const {
        return cmp_module_term(order, ring.weights(), a.pos, a.exps, b.pos, b.exps);
    }
};

VecPoly to_vecpoly(const EngineContext& cx, const FreeElement& v);
VecPoly poly_to_vecpoly(const EngineContext& cx, const Polynomial& p, std::int32_t pos = 0);
FreeElement from_vecpoly(const Ring& ring, int rank, const VecPoly& v);
Polynomial poly_from_vecpoly(const Ring& ring, const VecPoly& v);

/// a += c * x^shift * b
void vp_add_scaled(const EngineContext& cx, VecPoly& a, const Scalar& c, const Expvec& shift,
                   const VecPoly& b);

/// Divide v by the basis; returns the fully reduced remainder.
VecPoly vp_normal_form(const EngineContext& cx, VecPoly v, const std::vector<VecPoly>& basis);

/// Normalize: monic (field) leading coefficient.
void vp_make_monic(const EngineContext& cx, VecPoly& v);
/// Over QQ, clear denominators and content (integer primitive form, positive
/// leading coefficient); over GF(p), make monic.
void vp_normalize_primitive(const EngineContext& cx, VecPoly& v);

/// Buchberger: reduced basis of the submodule generated by gens. Deterministic.
std::vector<VecPoly> buchberger(const EngineContext& cx, std::vector<VecPoly> gens);

long vp_max_coeff_bits(const EngineContext& cx, const VecPoly& v);

}  // namespace oideal::detail

#endif
