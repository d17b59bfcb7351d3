#include "oideal/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oideal {

namespace {

constexpr std::int32_t kMaxExp = 1 << 24;

void check_exp_overflow(std::int64_t e) {
    if (e > kMaxExp) throw std::overflow_error("monomial exponent overflow");
}

Expvec exp_add(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = (std::int64_t)a[i] + b[i];
        check_exp_overflow(s);
        r[i] = (std::int32_t)s;
    }
    return r;
}

}  // namespace

void check_same_ring(const Ring& a, const Ring& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("ring mismatch in ") + what);
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    const auto& w = ring_.weights();
    const auto& ord = ring_.order();
    for (const auto& t : terms)
        if ((int)t.exps.size() != ring_.nvars())
            throw std::invalid_argument("exponent vector length mismatch");
    std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
        return cmp_exponents(ord, w, x.exps, y.exps) > 0;
    });
    const Field& F = ring_.field();
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().exps == t.exps) {
            terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
            if (F.is_zero(terms_.back().coeff)) terms_.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(const Ring& r, const Scalar& c) {
    Polynomial p(r);
    if (!r.field().is_zero(c)) p.terms_.push_back(Term{Expvec((std::size_t)r.nvars(), 0), c});
    return p;
}

Polynomial Polynomial::constant(const Ring& r, long c) { return constant(r, r.field().from_int(c)); }

Polynomial Polynomial::variable(const Ring& r, int var, int exp) {
    if (var < 0 || var >= r.nvars()) throw std::invalid_argument("variable index out of range");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Expvec e((std::size_t)r.nvars(), 0);
    e[(std::size_t)var] = exp;
    return monomial(r, std::move(e), r.field().one());
}

Polynomial Polynomial::monomial(const Ring& r, Expvec e, const Scalar& c) {
    Polynomial p(r);
    if ((int)e.size() != r.nvars()) throw std::invalid_argument("exponent vector length mismatch");
    if (!r.field().is_zero(c)) p.terms_.push_back(Term{std::move(e), c});
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_[0].exps)
        if (e) return false;
    return true;
}

bool Polynomial::is_unit_constant() const { return !terms_.empty() && is_constant(); }

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_[0];
}

Scalar Polynomial::constant_coeff() const {
    if (!terms_.empty()) {
        const Term& last = terms_.back();
        bool constant = true;
        for (auto e : last.exps) constant = constant && e == 0;
        if (constant) return last.coeff;
    }
    return ring_.field().zero();
}

std::int64_t Polynomial::weighted_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, oideal::weighted_degree(t.exps, ring_.weights()));
    return d;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) {
        std::int64_t s = 0;
        for (auto e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

namespace {

// Merge two descending term lists with b scaled by c * x^shift.
std::vector<Term> merge_scaled(const Ring& ring, const std::vector<Term>& a, const Scalar& c,
                               const Expvec* shift, const std::vector<Term>& b) {
    const Field& F = ring.field();
    const auto& w = ring.weights();
    const auto& ord = ring.order();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Expvec bexp = shift ? exp_add(b[j].exps, *shift) : b[j].exps;
        if (i == a.size()) {
            Scalar cc = F.mul(c, b[j].coeff);
            if (!F.is_zero(cc)) out.push_back(Term{std::move(bexp), std::move(cc)});
            ++j;
            continue;
        }
        int cmp = cmp_exponents(ord, w, a[i].exps, bexp);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            Scalar cc = F.mul(c, b[j].coeff);
            if (!F.is_zero(cc)) out.push_back(Term{std::move(bexp), std::move(cc)});
            ++j;
        } else {
            Scalar cc = F.add(a[i].coeff, F.mul(c, b[j].coeff));
            if (!F.is_zero(cc)) out.push_back(Term{std::move(bexp), std::move(cc)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

void add_scaled(Polynomial& a, const Scalar& c, const Expvec& shift, const Polynomial& b) {
    if (b.is_zero() || b.ring().field().is_zero(c)) return;
    Ring ring = b.ring();
    if (a.ring_.data() == nullptr) a.ring_ = ring;
    a.terms_ = merge_scaled(ring, a.terms_, c, &shift, b.terms());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.ring_.data() == nullptr) return b;
    if (b.ring_.data() == nullptr) return a;
    check_same_ring(a.ring_, b.ring_, "poly add");
    Polynomial r(a.ring_);
    r.terms_ = merge_scaled(a.ring_, a.terms_, a.ring_.field().one(), nullptr, b.terms_);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (b.ring_.data() == nullptr) return a;
    if (a.ring_.data() == nullptr) return -b;
    check_same_ring(a.ring_, b.ring_, "poly sub");
    Polynomial r(a.ring_);
    r.terms_ = merge_scaled(a.ring_, a.terms_, a.ring_.field().from_int(-1), nullptr, b.terms_);
    return r;
}

Polynomial operator-(const Polynomial& a) {
    if (a.ring().data() == nullptr) return a;
    return a.ring().field().from_int(-1) * a;
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
    const Field& F = a.ring().field();
    std::vector<Term> t;
    if (!F.is_zero(c)) {
        t.reserve(a.terms().size());
        for (const auto& x : a.terms()) t.push_back(Term{x.exps, F.mul(c, x.coeff)});
    }
    return Polynomial(a.ring(), std::move(t));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring_, b.ring_, "poly mul");
    Polynomial acc(a.ring_);
    // Multiply the shorter list into the longer.
    const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const Polynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& t : small.terms_) add_scaled(acc, t.coeff, t.exps, big);
    return acc;
}

Polynomial pow(const Polynomial& a, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = Polynomial::constant(a.ring(), 1);
    Polynomial base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring(), b.ring(), "poly division");
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field& F = a.ring().field();
    Polynomial rem = a, q(a.ring());
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        const Term& lb = b.leading_term();
        Expvec shift(lt.exps.size());
        for (std::size_t i = 0; i < shift.size(); ++i) {
            std::int32_t d = lt.exps[i] - lb.exps[i];
            if (d < 0) throw std::domain_error("inexact polynomial division");
            shift[i] = d;
        }
        Scalar c = F.div(lt.coeff, lb.coeff);
        qterms.push_back(Term{shift, c});
        add_scaled(rem, F.neg(c), shift, b);
    }
    return Polynomial(a.ring(), std::move(qterms));
}

Polynomial transport_poly(const Polynomial& p, const Ring& to, const std::vector<int>& var_map) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Expvec e((std::size_t)to.nvars(), 0);
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            int j = var_map[i];
            if (j < 0) throw std::invalid_argument("transport drops a used variable");
            e[(std::size_t)j] = t.exps[i];
        }
        terms.push_back(Term{std::move(e), t.coeff});
    }
    return Polynomial(to, std::move(terms));
}

Polynomial substitute(const Polynomial& p, const Ring& to, const std::vector<int>& var_map,
                      const std::vector<Scalar>& values) {
    const Field& F = to.field();
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Expvec e((std::size_t)to.nvars(), 0);
        Scalar c = t.coeff;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            int j = var_map[i];
            if (j >= 0) {
                e[(std::size_t)j] = t.exps[i];
            } else {
                Scalar v = values[i];
                for (std::int32_t k = 0; k < t.exps[i]; ++k) c = F.mul(c, v);
            }
        }
        terms.push_back(Term{std::move(e), std::move(c)});
    }
    return Polynomial(to, std::move(terms));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = ring_.field();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = F.str(t.coeff);
        bool neg = !c.empty() && c[0] == '-';
        std::string cabs = neg ? c.substr(1) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (any_var) mono << "*";
            mono << ring_.vars()[i];
            if (t.exps[i] > 1) mono << "^" << t.exps[i];
            any_var = true;
        }
        if (!any_var) {
            os << cabs;
        } else if (cabs == "1") {
            os << mono.str();
        } else {
            os << cabs << "*" << mono.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

FreeElement::FreeElement(Ring ring, int rank) : ring_(std::move(ring)) {
    coords_.assign((std::size_t)rank, Polynomial(ring_));
}

FreeElement::FreeElement(Ring ring, std::vector<Polynomial> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    for (auto& c : coords_)
        if (c.ring().data() == nullptr) c = Polynomial(ring_);
}

bool FreeElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

FreeElement FreeElement::unit(const Ring& r, int rank, int pos) {
    FreeElement e(r, rank);
    e[pos] = Polynomial::constant(r, 1);
    return e;
}

std::string FreeElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].to_string();
    }
    os << ")";
    return os.str();
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("free module rank mismatch");
    std::vector<Polynomial> c;
    for (int i = 0; i < a.rank(); ++i) c.push_back(a[i] + b[i]);
    return FreeElement(a.ring(), std::move(c));
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("free module rank mismatch");
    std::vector<Polynomial> c;
    for (int i = 0; i < a.rank(); ++i) c.push_back(a[i] - b[i]);
    return FreeElement(a.ring(), std::move(c));
}

FreeElement operator*(const Polynomial& c, const FreeElement& a) {
    std::vector<Polynomial> out;
    for (int i = 0; i < a.rank(); ++i) out.push_back(c * a[i]);
    return FreeElement(a.ring(), std::move(out));
}

FreeElement combine(const std::vector<Polynomial>& coeffs, const std::vector<FreeElement>& vecs) {
    if (coeffs.size() != vecs.size()) throw std::invalid_argument("coefficient count mismatch");
    if (vecs.empty()) throw std::invalid_argument("empty combination");
    FreeElement acc(vecs[0].ring(), vecs[0].rank());
    for (std::size_t i = 0; i < vecs.size(); ++i) acc = acc + coeffs[i] * vecs[i];
    return acc;
}

PolyMatrix::PolyMatrix(Ring ring, int rows, int cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign((std::size_t)rows * (std::size_t)cols, Polynomial(ring_));
}

FreeElement PolyMatrix::row(int r) const {
    std::vector<Polynomial> c;
    for (int j = 0; j < cols_; ++j) c.push_back(at(r, j));
    return FreeElement(ring_, std::move(c));
}

FreeElement PolyMatrix::col(int c) const {
    std::vector<Polynomial> r;
    for (int i = 0; i < rows_; ++i) r.push_back(at(i, c));
    return FreeElement(ring_, std::move(r));
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == o.data_[i])) return false;
    return true;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

PolyMatrix matrix_from_columns(const Ring& r, int rows, const std::vector<FreeElement>& cols) {
    PolyMatrix m(r, rows, (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j) {
        if (cols[(std::size_t)j].rank() != rows) throw std::invalid_argument("column rank mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[(std::size_t)j][i];
    }
    return m;
}

PolyMatrix matrix_from_rows(const Ring& r, int cols, const std::vector<FreeElement>& rows) {
    PolyMatrix m(r, (int)rows.size(), cols);
    for (int i = 0; i < (int)rows.size(); ++i) {
        if (rows[(std::size_t)i].rank() != cols) throw std::invalid_argument("row rank mismatch");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[(std::size_t)i][j];
    }
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix c(a.ring(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Polynomial s(a.ring());
            for (int k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

}  // namespace oideal
