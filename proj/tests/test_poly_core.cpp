#include <doctest.h>

#include "oideal/parse.hpp"
#include "oideal/rng.hpp"

using namespace oideal;

TEST_CASE("parse_ring defaults and options") {
    Ring r = parse_ring("QQ[a,b,c,d]");
    CHECK(r.field().kind() == Field::Kind::rationals);
    CHECK(r.nvars() == 4);
    CHECK(r.weights() == std::vector<long>{1, 1, 1, 1});
    CHECK(r.order().kind == OrderKind::grevlex);
    CHECK(r.to_string() == "QQ[a,b,c,d]");

    Ring rw = parse_ring("QQ[z1,z2,z3,z4,z5,z6] weights=(2,1,1,1,1,1)");
    CHECK(rw.weights()[0] == 2);
    CHECK(parse_poly(rw, "z1").weighted_degree() == 2);

    Ring rp = parse_ring("GF(32003)[x,y] order=lex");
    CHECK(rp.field().characteristic() == 32003);
    CHECK(rp.order().kind == OrderKind::lex);

    Ring rq = parse_ring("QQ[Z0,Z1,Z2,Z3] mod=(Z0*Z3 - Z1*Z2)");
    CHECK(rq.has_quotient());
    CHECK(rq.quotient().size() == 1);
}

TEST_CASE("parse_ring errors") {
    CHECK_THROWS_AS(parse_ring("GF(4)[x]"), ParseError);
    CHECK_THROWS_AS(parse_ring("GF(1)[x]"), ParseError);
    CHECK_THROWS_AS(parse_ring("QQ[x,x]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("QQ[x,y] weights=(0,1)"), ParseError);
    CHECK_THROWS_AS(parse_ring("QQ[x,"), ParseError);
    try {
        parse_ring("GF(4)[x]");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);  // byte offset of the modulus
    }
}

TEST_CASE("parse_poly basics") {
    Ring r = parse_ring("QQ[a,b,c,d]");
    Polynomial f = parse_poly(r, "a*d - b*c");
    CHECK(f.terms().size() == 2);
    // grevlex: equal degree, smaller trailing exponent wins, so bc leads.
    CHECK(f.leading_monomial() == Expvec{0, 1, 1, 0});

    Polynomial g = parse_poly(r, "c^3 - b*d^2");
    CHECK(g.terms().size() == 2);
    CHECK(g.leading_monomial() == Expvec{0, 0, 3, 0});

    CHECK(parse_poly(r, "a^0") == Polynomial::constant(r, 1));
    CHECK(parse_poly(r, "0").is_zero());
    CHECK_THROWS_AS(parse_poly(r, "a + q"), ParseError);
    CHECK_THROWS_AS(parse_poly(r, "a^-2"), ParseError);
}

TEST_CASE("compare: order axioms on fixed pairs") {
    Ring r2 = parse_ring("QQ[a,b]");
    CHECK(cmp_exponents(r2.order(), r2.weights(), {2, 0}, {1, 1}) > 0);  // a^2 > ab

    Ring rw = parse_ring("QQ[z1,z2,z3,z4,z5,z6] weights=(2,1,1,1,1,1)");
    // weighted degrees tie at 2; reverse-lex tie-break gives z1 > z2^2
    CHECK(cmp_exponents(rw.order(), rw.weights(), {1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}) > 0);

    Ring rl = parse_ring("QQ[x,y] order=lex");
    CHECK(cmp_exponents(rl.order(), rl.weights(), {1, 0}, {0, 2}) > 0);  // x > y^2 in lex

    CHECK_THROWS_AS(cmp_exponents(r2.order(), r2.weights(), {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("compare: random order axioms") {
    Rng rng(7);
    for (const char* rt : {"QQ[x,y,z]", "QQ[x,y,z] order=lex", "QQ[x,y,z] order=grlex",
                           "QQ[x,y,z] order=elim(1)", "QQ[x,y,z] weights=(3,2,1)"}) {
        Ring r = parse_ring(rt);
        auto rand_exp = [&] {
            Expvec e(3);
            for (auto& x : e) x = (std::int32_t)rng.integer(0, 5);
            return e;
        };
        Expvec one(3, 0);
        for (int trial = 0; trial < 200; ++trial) {
            Expvec a = rand_exp(), b = rand_exp(), c = rand_exp(), t = rand_exp();
            int ab = cmp_exponents(r.order(), r.weights(), a, b);
            // antisymmetry and EQ iff equal
            CHECK(cmp_exponents(r.order(), r.weights(), b, a) == -ab);
            CHECK((ab == 0) == (a == b));
            // transitivity
            int bc = cmp_exponents(r.order(), r.weights(), b, c);
            if (ab >= 0 && bc >= 0) CHECK(cmp_exponents(r.order(), r.weights(), a, c) >= 0);
            // multiplicativity
            Expvec at = a, bt = b;
            for (int i = 0; i < 3; ++i) {
                at[(std::size_t)i] += t[(std::size_t)i];
                bt[(std::size_t)i] += t[(std::size_t)i];
            }
            CHECK(cmp_exponents(r.order(), r.weights(), at, bt) == ab);
            // 1 is the minimum
            if (a != one) CHECK(cmp_exponents(r.order(), r.weights(), a, one) > 0);
        }
    }
}

TEST_CASE("poly arithmetic identities") {
    Ring r = parse_ring("QQ[x,y]");
    Polynomial x = parse_poly(r, "x"), y = parse_poly(r, "y");
    CHECK((x + y) * (x - y) == parse_poly(r, "x^2 - y^2"));
    CHECK((x * Polynomial::zero(r)).is_zero());
    CHECK_THROWS_AS(pow(x, -1), std::invalid_argument);

    Ring r2 = parse_ring("QQ[a]");
    Polynomial f = parse_poly(r2, "a + 2");
    CHECK_THROWS_AS(f * x, std::invalid_argument);  // ring mismatch
}

TEST_CASE("binomial expansion against a Pascal oracle") {
    // (1+t)^4 mod t^4 = 1 + 4t + 6t^2 + 4t^3
    Ring r = parse_ring("QQ[t]");
    Polynomial p = pow(parse_poly(r, "1 + t"), 4);
    long pascal[5] = {1, 4, 6, 4, 1};
    std::vector<Term> kept;
    for (const auto& tm : p.terms())
        if (tm.exps[0] < 4) kept.push_back(tm);
    Polynomial truncated(r, kept);
    Polynomial expect(r);
    for (int k = 0; k < 4; ++k)
        expect = expect + Polynomial::constant(r, pascal[k]) * pow(parse_poly(r, "t"), k);
    CHECK(truncated == expect);
}

TEST_CASE("print-parse round trip, 1000 random polynomials per field") {
    Rng rng(11);
    for (const char* rt : {"QQ[x,y,z]", "GF(32003)[x,y,z]"}) {
        Ring r = parse_ring(rt);
        for (int i = 0; i < 1000; ++i) {
            Polynomial f = rng.random_poly(r, 4);
            CHECK(parse_poly(r, f.to_string()) == f);
        }
    }
}

TEST_CASE("round trip covers rational coefficients") {
    Ring r = parse_ring("QQ[x,y]");
    Polynomial f = parse_poly(r, "3/4*x^2 - 7/5*x*y + 1/9");
    CHECK(parse_poly(r, f.to_string()) == f);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(13);
    for (const char* rt : {"QQ[x,y]", "GF(101)[x,y]"}) {
        Ring r = parse_ring(rt);
        for (int i = 0; i < 50; ++i) {
            Polynomial a = rng.random_poly(r, 3), b = rng.random_poly(r, 3), c = rng.random_poly(r, 3);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("weighted degree of a product adds") {
    Rng rng(17);
    Ring r = parse_ring("QQ[x,y,z] weights=(3,2,1)");
    for (int i = 0; i < 100; ++i) {
        Polynomial a = rng.random_poly(r, 3), b = rng.random_poly(r, 3);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).weighted_degree() == a.weighted_degree() + b.weighted_degree());
    }
}

TEST_CASE("exact division") {
    Ring r = parse_ring("QQ[x,y]");
    Polynomial a = parse_poly(r, "x^2 - y^2"), b = parse_poly(r, "x - y");
    CHECK(divide_exact(a, b) == parse_poly(r, "x + y"));
    CHECK_THROWS_AS(divide_exact(parse_poly(r, "x^2 + y"), b), std::domain_error);
}

TEST_CASE("matrix parsing and transpose") {
    Ring r = parse_ring("QQ[x,y]");
    PolyMatrix m = parse_matrix(r, "[[x, y], [y, x^2]]");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.transposed().at(0, 1) == parse_poly(r, "y"));
    CHECK_THROWS_AS(parse_matrix(r, "[[x],[y,x]]"), ParseError);
}
