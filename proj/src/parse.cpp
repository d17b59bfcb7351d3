#include "oideal/parse.hpp"

#include <cctype>

namespace oideal {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(i, kw.size(), kw) == 0) {
            i += kw.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(i, msg); }

    std::string integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start || (i == start + 1 && !std::isdigit((unsigned char)s[start])))
            fail("expected integer");
        return s.substr(start, i - start);
    }

    long integer_long() {
        std::string t = integer();
        try {
            return std::stol(t);
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }

    std::string name() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (std::isalpha((unsigned char)s[i]) || s[i] == '_')) {
            ++i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        }
        if (i == start) fail("expected name");
        return s.substr(start, i - start);
    }
};

class PolyParser {
public:
    PolyParser(const Ring& ring, Cursor& c) : ring_(ring), c_(c) {}

    Polynomial poly() {
        bool neg = false;
        if (c_.try_consume('-'))
            neg = true;
        else
            c_.try_consume('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (c_.try_consume('+'))
                acc = acc + term();
            else if (c_.try_consume('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

private:
    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            c_.skip_ws();
            if (c_.try_consume('*')) {
                acc = acc * factor();
            } else {
                // Implicit product only before '(' or a name start: "2x" is rejected,
                // but nothing in the canonical output needs implicit products either.
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        c_.skip_ws();
        char ch = c_.peek();
        if (ch == '(') {
            c_.expect('(');
            Polynomial p = poly();
            c_.expect(')');
            return maybe_power(p);
        }
        if (std::isdigit((unsigned char)ch) || ch == '-' || ch == '+') {
            std::string num = c_.integer();
            if (c_.try_consume('/')) {
                std::string den = c_.integer();
                return Polynomial::constant(ring_, ring_.field().from_string(num + "/" + den));
            }
            Polynomial p = Polynomial::constant(ring_, ring_.field().from_string(num));
            return maybe_power(p);
        }
        std::size_t at = c_.i;
        std::string n = c_.name();
        int v = ring_.var_index(n);
        if (v < 0) throw ParseError(at, "unknown variable " + n);
        int e = 1;
        if (c_.try_consume('^')) {
            long ee = c_.integer_long();
            if (ee < 0) c_.fail("negative exponent");
            e = (int)ee;
        }
        return Polynomial::variable(ring_, v, e);
    }

    Polynomial maybe_power(const Polynomial& p) {
        if (c_.try_consume('^')) {
            long e = c_.integer_long();
            if (e < 0) c_.fail("negative exponent");
            return pow(p, (int)e);
        }
        return p;
    }

    const Ring& ring_;
    Cursor& c_;
};

}  // namespace

Ring parse_ring(const std::string& text) {
    Cursor c{text};
    Field field = Field::rationals();
    if (c.try_keyword("QQ")) {
        // rationals
    } else if (c.try_keyword("GF")) {
        c.expect('(');
        std::size_t at = c.i;
        long p = c.integer_long();
        if (p < 2 || p >= (1L << 31) || !is_prime_u32((std::uint32_t)p))
            throw ParseError(at, "non-prime modulus");
        field = Field::prime((std::uint32_t)p);
        c.expect(')');
    } else {
        c.fail("expected QQ or GF(p)");
    }
    c.expect('[');
    std::vector<std::string> vars;
    vars.push_back(c.name());
    while (c.try_consume(',')) vars.push_back(c.name());
    c.expect(']');

    std::vector<long> weights;
    OrderSpec order;
    std::string mod_text;
    while (!c.eof()) {
        if (c.try_keyword("weights")) {
            c.expect('=');
            c.expect('(');
            weights.clear();
            std::size_t at = c.i;
            weights.push_back(c.integer_long());
            while (c.try_consume(',')) weights.push_back(c.integer_long());
            c.expect(')');
            for (long w : weights)
                if (w <= 0) throw ParseError(at, "nonpositive weight");
            if (weights.size() != vars.size()) throw ParseError(at, "one weight per variable required");
        } else if (c.try_keyword("order")) {
            c.expect('=');
            if (c.try_keyword("grevlex"))
                order.kind = OrderKind::grevlex;
            else if (c.try_keyword("grlex"))
                order.kind = OrderKind::grlex;
            else if (c.try_keyword("lex"))
                order.kind = OrderKind::lex;
            else if (c.try_keyword("elim")) {
                c.expect('(');
                order.kind = OrderKind::elim;
                order.elim_block = (int)c.integer_long();
                c.expect(')');
            } else
                c.fail("unknown order");
        } else if (c.try_keyword("mod")) {
            c.expect('=');
            c.expect('(');
            // Capture the balanced parenthesized generator list, parsed below
            // once the quotient-free ring exists.
            int depth = 1;
            std::size_t start = c.i;
            while (c.i < text.size() && depth > 0) {
                if (text[c.i] == '(') ++depth;
                if (text[c.i] == ')') --depth;
                ++c.i;
            }
            if (depth != 0) c.fail("unbalanced mod=(...)");
            mod_text = text.substr(start, c.i - 1 - start);
        } else {
            c.fail("unexpected trailing input");
        }
    }

    Ring base = Ring::make(field, vars, weights, order, {});
    if (mod_text.empty()) return base;
    std::vector<Polynomial> quot = parse_poly_list(base, mod_text);
    for (const auto& q : quot)
        if (q.is_zero()) throw ParseError(0, "zero quotient generator");
    return Ring::make(field, vars, weights, order, std::move(quot));
}

Polynomial parse_poly(const Ring& ring, const std::string& text) {
    Cursor c{text};
    PolyParser pp(ring, c);
    Polynomial p = pp.poly();
    if (!c.eof()) c.fail("unexpected trailing input");
    return p;
}

std::vector<Polynomial> parse_poly_list(const Ring& ring, const std::string& text) {
    Cursor c{text};
    PolyParser pp(ring, c);
    std::vector<Polynomial> out;
    out.push_back(pp.poly());
    while (c.try_consume(',')) out.push_back(pp.poly());
    if (!c.eof()) c.fail("unexpected trailing input");
    return out;
}

PolyMatrix parse_matrix(const Ring& ring, const std::string& text) {
    Cursor c{text};
    PolyParser pp(ring, c);
    c.expect('[');
    std::vector<std::vector<Polynomial>> rows;
    do {
        c.expect('[');
        std::vector<Polynomial> row;
        row.push_back(pp.poly());
        while (c.try_consume(',')) row.push_back(pp.poly());
        c.expect(']');
        if (!rows.empty() && rows[0].size() != row.size()) c.fail("ragged matrix rows");
        rows.push_back(std::move(row));
    } while (c.try_consume(','));
    c.expect(']');
    if (!c.eof()) c.fail("unexpected trailing input");
    PolyMatrix m(ring, (int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[(std::size_t)i][(std::size_t)j];
    return m;
}

}  // namespace oideal
