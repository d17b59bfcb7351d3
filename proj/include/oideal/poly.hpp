#ifndef OIDEAL_POLY_HPP
#define OIDEAL_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "oideal/ring.hpp"

namespace oideal {

struct Term {
    Expvec exps;
    Scalar coeff;
};

/// Sparse exact multivariate polynomial. Terms are kept sorted in decreasing
/// monomial order with no zero coefficients, so the leading term is terms()[0].
/// Arithmetic is free-ring arithmetic; quotient semantics live in the
/// Groebner layer.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    /// Takes arbitrary terms; sorts, combines and prunes zeros.
    Polynomial(Ring ring, std::vector<Term> terms);

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, const Scalar& c);
    static Polynomial constant(const Ring& r, long c);
    static Polynomial variable(const Ring& r, int var, int exp = 1);
    static Polynomial monomial(const Ring& r, Expvec e, const Scalar& c);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero constant with no variable part.
    bool is_unit_constant() const;

    const Term& leading_term() const;
    const Expvec& leading_monomial() const { return leading_term().exps; }
    const Scalar& leading_coeff() const { return leading_term().coeff; }
    Scalar constant_coeff() const;

    std::int64_t weighted_degree() const;  // -1 for the zero polynomial
    std::int64_t total_degree() const;     // unweighted; -1 for zero

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    friend Polynomial operator+(const Polynomial&, const Polynomial&);
    friend Polynomial operator-(const Polynomial&, const Polynomial&);
    friend Polynomial operator*(const Polynomial&, const Polynomial&);
    friend void add_scaled(Polynomial&, const Scalar&, const Expvec&, const Polynomial&);
    Ring ring_;
    std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Scalar& c, const Polynomial& a);
Polynomial pow(const Polynomial& a, int e);

/// a += c * x^shift * b, the basic reduction step.
void add_scaled(Polynomial& a, const Scalar& c, const Expvec& shift, const Polynomial& b);

/// Exact division; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Map a polynomial into another ring over the same field; var_map[i] is the
/// index in `to` of variable i of `from` (-1 entries require the exponent be 0).
Polynomial transport_poly(const Polynomial& p, const Ring& to, const std::vector<int>& var_map);

/// Substitute scalars for a subset of variables (value index = variable index;
/// entries may be absent). Result lives in `to` with var_map as in transport.
Polynomial substitute(const Polynomial& p, const Ring& to, const std::vector<int>& var_map,
                      const std::vector<Scalar>& values);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Element of a free module R^n, stored as its coordinate polynomials.
class FreeElement {
public:
    FreeElement() = default;
    FreeElement(Ring ring, int rank);
    FreeElement(Ring ring, std::vector<Polynomial> coords);

    const Ring& ring() const { return ring_; }
    int rank() const { return (int)coords_.size(); }
    const std::vector<Polynomial>& coords() const { return coords_; }
    const Polynomial& operator[](int i) const { return coords_[(std::size_t)i]; }
    Polynomial& operator[](int i) { return coords_[(std::size_t)i]; }
    bool is_zero() const;

    bool operator==(const FreeElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    static FreeElement unit(const Ring& r, int rank, int pos);

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Polynomial> coords_;
};

FreeElement operator+(const FreeElement& a, const FreeElement& b);
FreeElement operator-(const FreeElement& a, const FreeElement& b);
FreeElement operator*(const Polynomial& c, const FreeElement& a);

/// Dot product of a coefficient vector with a list of free elements.
FreeElement combine(const std::vector<Polynomial>& coeffs, const std::vector<FreeElement>& vecs);

/// Rectangular matrix of polynomials over one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Ring ring, int rows, int cols);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Polynomial& at(int r, int c) const { return data_[(std::size_t)(r * cols_ + c)]; }
    Polynomial& at(int r, int c) { return data_[(std::size_t)(r * cols_ + c)]; }

    FreeElement row(int r) const;
    FreeElement col(int c) const;
    PolyMatrix transposed() const;

    bool operator==(const PolyMatrix& o) const;

    std::string to_string() const;

private:
    Ring ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
};

PolyMatrix matrix_from_columns(const Ring& r, int rows, const std::vector<FreeElement>& cols);
PolyMatrix matrix_from_rows(const Ring& r, int cols, const std::vector<FreeElement>& rows);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

void check_same_ring(const Ring& a, const Ring& b, const char* what);

}  // namespace oideal

#endif
