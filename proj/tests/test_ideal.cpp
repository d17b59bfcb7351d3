#include <doctest.h>

#include <functional>

#include "oideal/fpmodule.hpp"
#include "oideal/parse.hpp"
#include "oideal/rng.hpp"

using namespace oideal;

TEST_CASE("ideal operation examples") {
    Ring r = parse_ring("QQ[x,y]");
    Ideal x_ideal(r, parse_poly_list(r, "x"));
    Ideal xy(r, parse_poly_list(r, "x, y"));
    CHECK(ideal_equal(ideal_quotient(x_ideal, xy), x_ideal));

    Ideal a(r, parse_poly_list(r, "x^2, x*y"));
    CHECK(ideal_equal(ideal_quotient(a, parse_poly(r, "y")), x_ideal));

    CHECK(ideal_power(xy, 0).is_unit());
    CHECK(ideal_equal(ideal_sum(x_ideal, Ideal(r, parse_poly_list(r, "y"))), xy));
}

TEST_CASE("colon correctness property and the intersection-division oracle") {
    Rng rng(31);
    Ring r = parse_ring("QQ[x,y,z]");
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> agens;
        for (int i = 0; i < 2; ++i) agens.push_back(rng.random_poly(r, 2));
        Polynomial b = rng.random_poly(r, 2);
        if (b.is_zero()) continue;
        Ideal A(r, agens);
        if (A.generators().empty()) continue;
        Ideal C = ideal_quotient(A, b);
        // f in (A : b) iff f*b in A, for the computed generators and random probes
        for (const auto& f : C.generators()) CHECK(A.contains(f * b));
        for (int probe = 0; probe < 4; ++probe) {
            Polynomial f = rng.random_poly(r, 2);
            CHECK(C.contains(f) == A.contains(f * b));
        }
        // oracle: a : b = (a cap (b)) / b, computed via the t-trick
        Ideal cap = ideal_intersect(A, Ideal(r, {b}));
        std::vector<Polynomial> divided;
        for (const auto& g : cap.generators()) divided.push_back(divide_exact(g, b));
        CHECK(ideal_equal(C, Ideal(r, divided)));
    }
}

TEST_CASE("saturation stabilizes the quotient") {
    Ring r = parse_ring("QQ[x,y]");
    Ideal a(r, parse_poly_list(r, "x^3*y, x*y^2"));
    Ideal b(r, parse_poly_list(r, "x"));
    Ideal sat = ideal_saturate(a, b);
    CHECK(ideal_equal(ideal_quotient(sat, b), sat));
    CHECK(sat.contains(parse_poly(r, "y")));
}

TEST_CASE("radical membership") {
    Ring r = parse_ring("QQ[x,y]");
    CHECK(radical_member(parse_poly(r, "x"), Ideal(r, parse_poly_list(r, "x^2"))));
    CHECK(!radical_member(parse_poly(r, "x"), Ideal(r, parse_poly_list(r, "y"))));
}

TEST_CASE("radical membership on the quadric cone with a parameterization oracle") {
    Ring cone = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)");
    // (z0,z1,z2,z3) = (s^2, s*t, s*u, t*u) parameterizes the cone: it kills
    // the quotient generator.
    Ring par = parse_ring("QQ[s,t,u]");
    auto sub = [&](const Polynomial& p) {
        std::vector<Polynomial> images = parse_poly_list(par, "s^2, s*t, s*u, t*u");
        Polynomial acc(par);
        for (const auto& term : p.terms()) {
            Polynomial m = Polynomial::constant(par, term.coeff);
            for (int v = 0; v < 4; ++v)
                m = m * pow(images[(std::size_t)v], term.exps[(std::size_t)v]);
            acc = acc + m;
        }
        return acc;
    };
    Polynomial quadric = parse_poly(cone.without_quotient(), "z0*z3 - z1*z2");
    CHECK(sub(quadric).is_zero());

    Ideal I(cone, parse_poly_list(cone, "z0*z1, z1^2"));
    bool z0_in = radical_member(parse_poly(cone, "z0"), I);
    bool z1_in = radical_member(parse_poly(cone, "z1"), I);
    CHECK(!z0_in);
    CHECK(z1_in);
    // witness point (s,t,u) = (1,0,1): generators vanish, z0 = 1 does not
    auto eval = [&](const Polynomial& p, long s, long t, long u) {
        const Field& F = par.field();
        Scalar acc = F.zero();
        for (const auto& term : p.terms()) {
            Scalar v = term.coeff;
            long vals[3] = {s, t, u};
            for (int k = 0; k < 3; ++k)
                for (int e = 0; e < term.exps[(std::size_t)k]; ++e)
                    v = F.mul(v, F.from_int(vals[k]));
            acc = F.add(acc, v);
        }
        return acc;
    };
    for (const auto& g : I.generators())
        CHECK(par.field().is_zero(eval(sub(g), 1, 0, 1)));
    CHECK(!par.field().is_zero(eval(sub(parse_poly(cone, "z0")), 1, 0, 1)));
}

TEST_CASE("dimension and height examples") {
    Ring r = parse_ring("QQ[a,b,c,d]");
    CHECK(dimension(Ideal(r, parse_poly_list(r, "a,b,c,d"))).height.value_or(-1) == 4);
    CHECK(dimension(Ideal(r, parse_poly_list(r, "a*d - b*c"))).height.value_or(-1) == 1);

    Ring cone = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)");
    HeightReport h = dimension(Ideal(cone, parse_poly_list(cone, "z0,z1,z2,z3")));
    CHECK(h.height.value_or(-1) == 3);

    HeightReport unit = dimension(Ideal::unit(r));
    CHECK(!unit.height.has_value());
    CHECK(unit.dim_quotient == -1);
    CHECK(unit.height_str() == "unit");

    CHECK(dimension(Ideal::zero(r)).dim_quotient == 4);
}

TEST_CASE("dimension against the brute-force subset oracle") {
    Rng rng(37);
    Ring r = parse_ring("QQ[v,w,x,y,z]");
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens;
        int k = (int)rng.integer(1, 5);
        for (int i = 0; i < k; ++i) {
            Polynomial m = rng.random_monomial(r, 4);
            if (!m.is_unit_constant()) gens.push_back(m);
        }
        if (gens.empty()) continue;
        Ideal I(r, gens);
        // brute force: largest variable subset none of whose generators'
        // supports it contains
        int best = -1;
        for (int mask = 0; mask < 32; ++mask) {
            bool ok = true;
            for (const auto& g : I.generators()) {
                bool inside = true;
                for (int v = 0; v < 5; ++v)
                    if (g.leading_monomial()[(std::size_t)v] > 0 && !((mask >> v) & 1)) inside = false;
                if (inside) ok = false;
            }
            if (ok) best = std::max(best, __builtin_popcount((unsigned)mask));
        }
        CHECK(dimension(I).dim_quotient == best);
    }
}

TEST_CASE("Krull: ht(I) <= mu(I) on random proper ideals") {
    Rng rng(41);
    Ring r = parse_ring("QQ[x,y,z]");
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        int k = (int)rng.integer(1, 3);
        for (int i = 0; i < k; ++i) {
            Polynomial g = rng.random_poly(r, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        Ideal I(r, gens);
        if (I.generators().empty() || I.is_unit()) continue;
        CHECK(dimension(I).height.value_or(0) <= (int)I.generators().size());
    }
}

TEST_CASE("reduction tests") {
    Ring r = parse_ring("QQ[x,y]");
    Ideal I2 = ideal_power(Ideal(r, parse_poly_list(r, "x, y")), 2);
    Ideal J(r, parse_poly_list(r, "x^2, y^2"));
    ReductionResult red = is_reduction(J, I2, 6);
    CHECK(red.confirmed);
    CHECK(red.n == 1);

    CHECK(is_reduction(I2, I2, 6).n == 0);

    Ideal Jx(r, parse_poly_list(r, "x"));
    Ideal Ixy(r, parse_poly_list(r, "x, y"));
    CHECK(!is_reduction(Jx, Ixy, 5).confirmed);

    CHECK_THROWS_AS(is_reduction(Ixy, Jx, 3), std::invalid_argument);  // J not inside I

    // monotonicity: J * I^m = I^{m+1} also at m = n+1
    Ideal JI = ideal_product(J, I2);
    Ideal JI2 = ideal_product(JI, I2);
    Ideal I2cube = ideal_power(I2, 3);
    for (const auto& g : I2cube.generators()) CHECK(JI2.contains(g));
}

TEST_CASE("generic combination: free module and symbolic-random agreement") {
    Ring r = parse_ring("QQ[x,y]");
    FPModule free2 = FPModule::free_module(r, 2);
    GenericOrderIdealReport sym = generic_order_ideal_symbolic(free2);
    CHECK(sym.max_height == 2);
    // the symbolic ideal is (Z1, Z2) in R[Z]
    CHECK(sym.ideal.generators().size() == 2);

    Rng rng(43);
    GenericOrderIdealReport rnd = generic_order_ideal_random(free2, 5, rng);
    CHECK(rnd.max_height == sym.max_height);

    // a torsion-bearing module: the maximal ideal of k[x,y]
    FPModule m2 = omega_presented(r, 2, 0);
    GenericOrderIdealReport sym2 = generic_order_ideal_symbolic(m2);
    Rng rng2(47);
    GenericOrderIdealReport rnd2 = generic_order_ideal_random(m2, 5, rng2);
    CHECK(sym2.max_height == rnd2.max_height);
    for (const auto& h : rnd2.heights) CHECK(h.probabilistic);
}
