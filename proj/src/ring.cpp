#include "oideal/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oideal/poly.hpp"

namespace oideal {

RingData::RingData() = default;
RingData::~RingData() = default;

Ring Ring::make(Field field, std::vector<std::string> vars, std::vector<long> weights,
                OrderSpec order, std::vector<Polynomial> quotient) {
    auto d = std::make_shared<RingData>();
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw std::invalid_argument("one weight per variable required");
    for (long w : weights)
        if (w <= 0) throw std::invalid_argument("nonpositive weight");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable " + v);
    if (order.kind == OrderKind::elim &&
        (order.elim_block < 0 || (std::size_t)order.elim_block > vars.size()))
        throw std::invalid_argument("elimination block out of range");
    d->field = field;
    d->vars = std::move(vars);
    d->weights = std::move(weights);
    d->order = order;
    for (auto& q : quotient)
        if (q.is_zero()) throw std::invalid_argument("zero quotient generator");
    d->quotient = std::move(quotient);
    return Ring(std::move(d));
}

const Field& Ring::field() const { return d_->field; }
const std::vector<std::string>& Ring::vars() const { return d_->vars; }
int Ring::nvars() const { return (int)d_->vars.size(); }
const std::vector<long>& Ring::weights() const { return d_->weights; }
const OrderSpec& Ring::order() const { return d_->order; }
const std::vector<Polynomial>& Ring::quotient() const { return d_->quotient; }
bool Ring::has_quotient() const { return !d_->quotient.empty(); }

bool Ring::operator==(const Ring& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    if (d_->field != o.d_->field || d_->vars != o.d_->vars || d_->weights != o.d_->weights ||
        !(d_->order == o.d_->order))
        return false;
    if (d_->quotient.size() != o.d_->quotient.size()) return false;
    for (std::size_t i = 0; i < d_->quotient.size(); ++i) {
        if (d_->quotient[i].terms().size() != o.d_->quotient[i].terms().size()) return false;
        const auto& ta = d_->quotient[i].terms();
        const auto& tb = o.d_->quotient[i].terms();
        for (std::size_t j = 0; j < ta.size(); ++j)
            if (ta[j].exps != tb[j].exps || ta[j].coeff != tb[j].coeff) return false;
    }
    return true;
}

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < d_->vars.size(); ++i)
        if (d_->vars[i] == name) return (int)i;
    return -1;
}

Ring Ring::with_order(OrderSpec ord) const {
    std::vector<Polynomial> q;
    Ring r = Ring::make(d_->field, d_->vars, d_->weights, ord, {});
    if (!d_->quotient.empty()) {
        std::vector<int> idmap(d_->vars.size());
        for (std::size_t i = 0; i < idmap.size(); ++i) idmap[i] = (int)i;
        for (const auto& g : d_->quotient) q.push_back(transport_poly(g, r.without_quotient(), idmap));
        r = Ring::make(d_->field, d_->vars, d_->weights, ord, std::move(q));
    }
    return r;
}

Ring Ring::without_quotient() const {
    if (!has_quotient()) return *this;
    return Ring::make(d_->field, d_->vars, d_->weights, d_->order, {});
}

std::string Ring::to_string() const {
    std::ostringstream os;
    if (d_->field.kind() == Field::Kind::rationals)
        os << "QQ";
    else
        os << "GF(" << d_->field.characteristic() << ")";
    os << "[";
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
        if (i) os << ",";
        os << d_->vars[i];
    }
    os << "]";
    bool wtd = false;
    for (long w : d_->weights) wtd = wtd || w != 1;
    if (wtd) {
        os << " weights=(";
        for (std::size_t i = 0; i < d_->weights.size(); ++i) {
            if (i) os << ",";
            os << d_->weights[i];
        }
        os << ")";
    }
    switch (d_->order.kind) {
        case OrderKind::grevlex: break;
        case OrderKind::lex: os << " order=lex"; break;
        case OrderKind::grlex: os << " order=grlex"; break;
        case OrderKind::elim: os << " order=elim(" << d_->order.elim_block << ")"; break;
    }
    if (!d_->quotient.empty()) {
        os << " mod=(";
        for (std::size_t i = 0; i < d_->quotient.size(); ++i) {
            if (i) os << ",";
            os << d_->quotient[i].to_string();
        }
        os << ")";
    }
    return os.str();
}

Ring extend_ring(const Ring& base, int at, const std::vector<std::string>& new_vars,
                 const std::vector<long>& new_weights, OrderSpec order, bool keep_quotient) {
    std::vector<std::string> vars;
    std::vector<long> weights;
    vars.reserve(base.vars().size() + new_vars.size());
    for (int i = 0; i < at; ++i) {
        vars.push_back(base.vars()[(std::size_t)i]);
        weights.push_back(base.weights()[(std::size_t)i]);
    }
    for (std::size_t i = 0; i < new_vars.size(); ++i) {
        vars.push_back(new_vars[i]);
        weights.push_back(new_weights.empty() ? 1 : new_weights[i]);
    }
    for (int i = at; i < base.nvars(); ++i) {
        vars.push_back(base.vars()[(std::size_t)i]);
        weights.push_back(base.weights()[(std::size_t)i]);
    }
    Ring plain = Ring::make(base.field(), vars, weights, order, {});
    if (!keep_quotient || !base.has_quotient()) return plain;
    std::vector<int> vmap((std::size_t)base.nvars());
    for (int i = 0; i < base.nvars(); ++i) vmap[(std::size_t)i] = i < at ? i : i + (int)new_vars.size();
    std::vector<Polynomial> q;
    for (const auto& g : base.quotient()) q.push_back(transport_poly(g, plain, vmap));
    return Ring::make(base.field(), vars, weights, order, std::move(q));
}

std::vector<std::string> fresh_var_names(const Ring& base, const std::string& stem, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) {
        std::string name = stem + std::to_string(i);
        while (base.var_index(name) >= 0) name += "_";
        out.push_back(name);
    }
    return out;
}

}  // namespace oideal
