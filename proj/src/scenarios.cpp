#include "oideal/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <sstream>

#include "oideal/chern.hpp"
#include "oideal/fpmodule.hpp"
#include "oideal/parse.hpp"
#include "oideal/rees.hpp"
#include "oideal/rng.hpp"

namespace oideal {

bool Report::ok() const {
    for (const auto& f : facts)
        if (f.status == FactStatus::FAIL) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json jf = nlohmann::json::array();
    for (const auto& f : facts) {
        nlohmann::json o{{"name", f.name},
                         {"status", f.status == FactStatus::PASS   ? "PASS"
                                    : f.status == FactStatus::FAIL ? "FAIL"
                                                                   : "SKIP"}};
        if (!f.expected.empty()) o["expected"] = f.expected;
        if (!f.computed.empty()) o["computed"] = f.computed;
        if (!f.note.empty()) o["note"] = f.note;
        jf.push_back(std::move(o));
    }
    return nlohmann::json{{"id", id}, {"ok", ok()}, {"seconds", seconds}, {"facts", std::move(jf)}};
}

std::string Report::pretty() const {
    std::ostringstream os;
    os << (ok() ? "PASS " : "FAIL ") << id << " (" << seconds << "s)\n";
    for (const auto& f : facts) {
        const char* tag = f.status == FactStatus::PASS   ? "  pass  "
                          : f.status == FactStatus::FAIL ? "  FAIL  "
                                                         : "  skip  ";
        os << tag << f.name;
        if (f.status == FactStatus::FAIL) os << "  expected " << f.expected << ", got " << f.computed;
        if (f.status == FactStatus::SKIP && !f.note.empty()) os << "  (" << f.note << ")";
        os << "\n";
    }
    return os.str();
}

namespace {

struct FactSink {
    Report& rep;

    void check(const std::string& name, bool ok, const std::string& expected,
               const std::string& computed, const std::string& note = "") {
        rep.facts.push_back(
            {name, ok ? FactStatus::PASS : FactStatus::FAIL, expected, computed, note});
    }
    void check_eq(const std::string& name, long expected, long computed, const std::string& note = "") {
        check(name, expected == computed, std::to_string(expected), std::to_string(computed), note);
    }
    void check_le(const std::string& name, long computed, long bound, const std::string& note = "") {
        check(name, computed <= bound, "<= " + std::to_string(bound), std::to_string(computed), note);
    }
    void check_true(const std::string& name, bool ok, const std::string& note = "") {
        check(name, ok, "true", ok ? "true" : "false", note);
    }
    void skip(const std::string& name, const std::string& reason) {
        rep.facts.push_back({name, FactStatus::SKIP, "", "", reason});
    }
};

std::string ht_str(const HeightReport& h) { return h.height_str(); }

// ----- shared builders ------------------------------------------------------

std::vector<Polynomial> curve_generators(const Ring& r, int alpha) {
    auto P = [&](const std::string& s) { return parse_poly(r, s); };
    std::string a = std::to_string(alpha);
    return {P("a*d - b*c"), P("c^" + std::to_string(alpha + 1) + " - b^" + std::to_string(alpha - 1) + "*d^2"),
            P("a*c^" + a + " - b^" + a + "*d"),
            P("b^" + std::to_string(alpha + 1) + " - a^2*c^" + std::to_string(alpha - 1))};
}

std::vector<Polynomial> ex311_minors(const Ring& rw) {
    auto P = [&](const std::string& s) { return parse_poly(rw, s); };
    return {P("z1*z4^2"),  P("z1*z5^2"), P("z1*z6^2"), P("z2^2*z5^2 - z3^2*z4^2"),
            P("z2^2*z6^2"), P("z3^2*z6^2")};
}

// Coefficient vector over the wedge^2 basis (pairs in lexicographic order)
// for e_1^e_2 + e_3^e_4 + ... + e_{2s-1}^e_{2s}.
FreeElement omega1_symplectic_element(const Ring& r, int d, int s) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pairs.push_back({i, j});
    FreeElement x(r, (int)pairs.size());
    for (int k = 0; k < s; ++k) {
        auto want = std::make_pair(2 * k, 2 * k + 1);
        auto it = std::find(pairs.begin(), pairs.end(), want);
        x[(int)(it - pairs.begin())] = Polynomial::constant(r, 1);
    }
    return x;
}

Ideal variables_ideal(const Ring& r, int upto) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < upto; ++i) gens.push_back(Polynomial::variable(r, i));
    return Ideal(r, std::move(gens));
}

// ----- scenarios -------------------------------------------------------------

void run_intro_chern(FactSink& f, const nlohmann::json& p, Rng&, const Limits*) {
    int lo = p.value("n_min", 2), hi = p.value("n_max", 12);
    for (int n = lo; n <= hi; ++n) {
        mpz_class c = chern_top_coefficient(n);
        mpz_class s = chern_alternating_sum(n);
        long expect = n % 2 == 0 ? 0 : 1;
        f.check("c_{n-1} parity, n=" + std::to_string(n), c == expect, std::to_string(expect),
                c.get_str(), "series route");
        f.check("series equals closed form, n=" + std::to_string(n), c == s, c.get_str(), s.get_str(),
                "independent binomial route");
    }
}

void run_ex310(FactSink& f, const nlohmann::json& p, Rng&, const Limits* limits) {
    int alpha = p.value("alpha", 2);
    Ring r = parse_ring("QQ[a,b,c,d]");
    Ideal I(r, curve_generators(r, alpha));
    auto Imod = present_ideal_as_module(I);

    f.check_eq("mu(I)", 4, minimalize(Imod.module).n_generators(), "minimally generated by 4 elements");
    f.check_eq("ht(I)", 2, dimension(I).height.value_or(-1), "curve in projective 3-space");

    GsReport gs = check_Gs(Imod.module, -1);
    f.check_true("I satisfies G_infinity", gs.holds, "Fitting-height reformulation");

    PerpResult N = perpendicular(Imod.module);
    f.check_eq("rank of the perpendicular module", 3, N.perp.rank(), "");

    // The relation module of the perpendicular is generated by the single
    // column of the four curve generators.
    auto gens = curve_generators(r, alpha);
    PolyMatrix col(r, 4, 1);
    for (int i = 0; i < 4; ++i) col.at(i, 0) = gens[(std::size_t)i];
    f.check_true("perpendicular relations match the displayed column",
                 same_relation_module(N.perp, FPModule(r, 4, col)),
                 "single generator column");

    OrderIdealResult oi = order_ideal(N.perp, FreeElement::unit(r, 4, 2), OrderIdealRoute::both);
    Ideal abcd(r, parse_poly_list(r, "a,b,c,d"));
    f.check_true("order ideal of generator 3 equals (a,b,c,d)", ideal_equal(oi.ideal, abcd),
                 "mutual membership, both routes agree");
    HeightReport h = dimension(oi.ideal);
    f.check_eq("its height", 4, h.height.value_or(-1), "exceeds rank 3");

    ReesPresentation rp = rees_of_ideal(I, limits);
    f.check_le("analytic spread of I", rp.analytic_spread, 3, "monomial curve bound");
    if (alpha == 2) f.check_eq("analytic spread value at alpha=2", 3, rp.analytic_spread, "computed");
}

void run_ex311(FactSink& f, const nlohmann::json& p, Rng& rng, const Limits* limits) {
    int n_cap = p.value("n_max", 6);
    std::vector<long> coeffs;
    for (const auto& c : p.value("coeff_candidates", nlohmann::json::array({1, -1, 2, -2})))
        coeffs.push_back(c.get<long>());
    Ring rw = parse_ring("QQ[z1,z2,z3,z4,z5,z6] weights=(2,1,1,1,1,1)");
    std::vector<Polynomial> mins = ex311_minors(rw);
    Ideal I(rw, mins);

    bool homog = true;
    for (const auto& m : mins) homog = homog && m.weighted_degree() == 4;
    f.check_true("all six minors homogeneous of weighted degree 4", homog, "regraded ring, deg z1 = 2");

    Polynomial pluck = mins[0] * mins[5] - mins[1] * mins[4] + mins[2] * mins[3];
    f.check_true("Pluecker relation holds", pluck.is_zero(), "m12 m34 - m13 m24 + m14 m23 = 0");

    // Candidate reductions: four minors plus a combination of the remaining
    // two; complementary pairs first, remainder seed-shuffled.
    struct Cand {
        int a, b;
        long lam;
    };
    std::vector<Cand> first, rest;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (long lam : coeffs) {
                bool complementary = (a == 0 && b == 5) || (a == 1 && b == 4) || (a == 2 && b == 3);
                (complementary ? first : rest).push_back({a, b, lam});
            }
    for (std::size_t i = rest.size(); i > 1; --i)
        std::swap(rest[i - 1], rest[(std::size_t)rng.integer(0, (long)i - 1)]);
    first.insert(first.end(), rest.begin(), rest.end());

    bool found = false;
    for (const auto& cand : first) {
        std::vector<Polynomial> jg;
        for (int k = 0; k < 6; ++k)
            if (k != cand.a && k != cand.b) jg.push_back(mins[(std::size_t)k]);
        jg.push_back(mins[(std::size_t)cand.a] +
                     Polynomial::constant(rw, cand.lam) * mins[(std::size_t)cand.b]);
        Ideal J(rw, jg);
        ReductionResult red = is_reduction(J, I, 2);
        if (!red.confirmed) continue;
        HeightReport h = dimension(ideal_quotient(J, I));
        if (h.height.value_or(-1) != 6) continue;
        found = true;
        f.check_true("5-generated homogeneous reduction found and certified", true,
                     "J = four minors plus m" + std::to_string(cand.a + 1) + " + (" +
                         std::to_string(cand.lam) + ")*m" + std::to_string(cand.b + 1) +
                         ", confirmed at n=" + std::to_string(red.n));
        f.check_le("reduction degree", red.n, n_cap, "degreewise certificate");
        f.check_eq("ht(J:I)", 6, h.height.value_or(-1), "complete intersection on the punctured spectrum");
        break;
    }
    if (!found)
        f.check_true("5-generated homogeneous reduction found and certified", false,
                     "search budget exhausted");
    f.skip("no 5-generated homogeneous reduction in the standard grading",
           "proof-based nonexistence, not machine-checked");
    (void)limits;
}

void run_prop313(FactSink& f, const nlohmann::json& p, Rng&, const Limits*) {
    int d = p.value("d", 4);
    int s = p.value("s", d / 2);
    std::ostringstream rs;
    rs << "QQ[";
    for (int i = 1; i <= d; ++i) rs << (i > 1 ? "," : "") << "z" << i;
    rs << "]";
    Ring r = parse_ring(rs.str());
    auto om = omega_module(r, d, 1);
    FreeElement x = omega1_symplectic_element(r, d, s);
    OrderIdealResult oi = order_ideal(om.module, x, OrderIdealRoute::both);
    f.check_true("order ideal equals (z1,...,z" + std::to_string(2 * s) + ")",
                 ideal_equal(oi.ideal, variables_ideal(r, 2 * s)), "both routes agree");
    HeightReport h = dimension(oi.ideal);
    f.check_eq("height equals the rank of the element", 2 * s, h.height.value_or(-1), "");
    int rank = om.module.rank();
    f.check_eq("rank of Omega^1", d - 1, rank, "");
    if (2 * s == d)
        f.check_true("height d exceeds rank d-1", h.height.value_or(-1) > rank,
                     "order ideal of extraordinary height");
}

void run_prop312(FactSink& f, const nlohmann::json& p, Rng& rng, const Limits*) {
    int d = p.value("d", 5);
    int trials = p.value("trials", 7);
    std::string field = p.value("field", std::string("GF(32003)"));
    std::ostringstream rs;
    rs << field << "[";
    for (int i = 1; i <= d; ++i) rs << (i > 1 ? "," : "") << "z" << i;
    rs << "]";
    Ring r = parse_ring(rs.str());
    auto om = omega_module(r, d, 1);
    int rank = om.module.rank();
    f.check_eq("rank of Omega^1", d - 1, rank, "");
    GenericOrderIdealReport rep = generic_order_ideal_random(om.module, trials, rng);
    f.check_le("max random order-ideal height over " + std::to_string(trials) + " trials",
               rep.max_height, rank, "heights at most the rank for odd d");
}

void run_post41(FactSink& f, const nlohmann::json&, Rng&, const Limits*) {
    Ring cone = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)");
    Ideal M(cone, parse_poly_list(cone, "z0^2, z0*z1, z1^2"));
    auto Mmod = present_ideal_as_module(M);
    PerpResult N = perpendicular(Mmod.module);
    f.check_eq("rank of N", 2, N.perp.rank(), "module over the quadric cone");
    OrderIdealResult oi = order_ideal(N.perp, FreeElement::unit(cone, 3, 1), OrderIdealRoute::both);
    f.check_true("order ideal of (z0 z1)-perp equals (z0,...,z3)",
                 ideal_equal(oi.ideal, variables_ideal(cone, 4)), "both routes agree");
    HeightReport h = dimension(oi.ideal);
    f.check_eq("its height", 3, h.height.value_or(-1), "height 3 exceeds rank 2");
}

void run_thm55(FactSink& f, const nlohmann::json& p, Rng&, const Limits*) {
    int alpha = p.value("alpha", 2);
    Ring r = parse_ring("QQ[a,b,c,d]");
    Ideal I(r, curve_generators(r, alpha));
    auto Imod = present_ideal_as_module(I);
    PerpResult N = perpendicular(Imod.module);

    int rank = N.perp.rank();
    f.check_eq("r = rank(N)", 3, rank, "");
    auto dual = dual_generators(N.perp);
    auto dual_mod = present_submodule(r, dual);
    int m = minimalize(dual_mod.module).n_generators();
    f.check_eq("m = mu(N*)", 4, m, "");

    Ideal tr = trace_ideal(N.perp);
    OrderIdealResult oi = order_ideal(N.perp, FreeElement::unit(r, 4, 2), OrderIdealRoute::both);
    f.check_true("sqrt(tr N) = sqrt(N*(x))", radical_equal(tr, oi.ideal),
                 "mutual radical membership");

    int i = 1;  // U = Rx
    int bound = (rank - 2) * (m - rank + 3) + (rank - 3) * i;
    HeightReport h = dimension(oi.ideal);
    f.check_eq("ht(N*(U)) meets the bound (r-2)(m-r+3)+(r-3)i", bound, h.height.value_or(-1),
               "sharp for i = 1");
    HeightReport ht_tr = dimension(tr);
    f.check_eq("ht(tr N) = mu(N*)", m, ht_tr.height.value_or(-1), "trace-height inequality is sharp");
}

void run_cor32(FactSink& f, const nlohmann::json& p, Rng&, const Limits*) {
    int i_max = p.value("i_max", 5);
    int n_cap = p.value("n_max", 3);
    Ring r = parse_ring("QQ[z1,z2,z3,z4]");
    auto om = omega_module(r, 4, 1);
    FreeElement x = omega1_symplectic_element(r, 4, 2);
    OrderIdealResult oi = order_ideal(om.module, x, OrderIdealRoute::dual_kernel);
    HeightReport h = dimension(oi.ideal);
    f.check_true("hypothesis: ht(N*(x)) exceeds the free-summand rank",
                 h.height.value_or(-1) > om.module.rank(), "x = e1^e2 + e3^e4 in Omega^1, d=4");

    // Extended presentation with x appended; psi' deletes the last row.
    int n = om.module.n_generators();
    PolyMatrix psi(r, n + 1, om.module.relations().cols() + 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < om.module.relations().cols(); ++b) psi.at(a, b) = om.module.relations().at(a, b);
    for (int a = 0; a < n; ++a) psi.at(a, om.module.relations().cols()) = x[a];
    psi.at(n, om.module.relations().cols()) = Polynomial::constant(r, -1);
    PolyMatrix psi_prime(r, n, psi.cols());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < psi.cols(); ++b) psi_prime.at(a, b) = psi.at(a, b);

    for (int i = 1; i <= i_max; ++i) {
        Ideal big = fitting_ideal(psi, (n + 1) - i);    // ideal of i-minors of psi
        Ideal small = fitting_ideal(psi_prime, n - i);  // ideal of i-minors of psi'
        if (big.is_zero_ideal() && small.is_zero_ideal()) {
            f.check_true("I_" + std::to_string(i) + "(psi) integral over I_" + std::to_string(i) + "(psi')",
                         true, "both zero");
            continue;
        }
        ReductionResult red = is_reduction(small, big, n_cap);
        f.check_true("I_" + std::to_string(i) + "(psi) integral over I_" + std::to_string(i) + "(psi')",
                     red.confirmed, red.confirmed ? "confirmed at n=" + std::to_string(red.n) : "not confirmed");
    }
}

void run_prop314(FactSink& f, const nlohmann::json& p, Rng& rng, const Limits*) {
    int t = p.value("t", 2), s = p.value("s", 4);
    int trials = p.value("trials", 5);
    int max_draws = p.value("max_draws", 10);
    std::string field = p.value("field", std::string("GF(32003)"));
    std::ostringstream rs;
    rs << field << "[";
    for (int i = 1; i <= s; ++i) rs << (i > 1 ? "," : "") << "z" << i;
    rs << "]";
    Ring r = parse_ring(rs.str());

    PolyMatrix chi(r, t, s);
    bool got = false;
    for (int attempt = 0; attempt < max_draws && !got; ++attempt) {
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < s; ++j) chi.at(i, j) = rng.random_form(r, 1);
        Ideal It = fitting_ideal(chi, 0);  // ideal of t-minors of the t-row matrix
        HeightReport h = dimension(It);
        got = h.height.value_or(-1) == s - t + 1;
    }
    f.check_true("random chi with ht I_t(chi) = s - t + 1", got, "generic maximal-minor height");
    if (!got) return;

    std::vector<FreeElement> cols;
    for (int j = 0; j < s; ++j) cols.push_back(chi.col(j));
    SyzygyResult ker = syzygies(r, cols);
    auto N = present_submodule(r, ker.generators_of_kernel);
    f.check_eq("rank of N = ker(chi)", s - t, N.module.rank(), "");
    GenericOrderIdealReport rep = generic_order_ideal_random(N.module, trials, rng);
    f.check_le("max random order-ideal height over " + std::to_string(trials) + " trials",
               rep.max_height, N.module.rank(), "t > 1 case: heights at most the rank");
}

void run_rmk22_corpus(FactSink& f, const nlohmann::json& p, Rng& rng, const Limits*) {
    int randoms = p.value("random_modules", 6);
    struct Entry {
        std::string name;
        FPModule mod;
    };
    std::vector<Entry> corpus;

    {
        Ring r = parse_ring("QQ[a,b,c,d]");
        Ideal I(r, curve_generators(r, 2));
        auto Imod = present_ideal_as_module(I);
        corpus.push_back({"curve ideal as module", Imod.module});
        corpus.push_back({"curve perpendicular", perpendicular(Imod.module).perp});
    }
    for (int d = 3; d <= 5; ++d) {
        std::ostringstream rs;
        rs << "QQ[";
        for (int i = 1; i <= d; ++i) rs << (i > 1 ? "," : "") << "z" << i;
        rs << "]";
        Ring r = parse_ring(rs.str());
        for (int i = 0; i <= d - 2; ++i)
            corpus.push_back({"Omega^" + std::to_string(i) + " d=" + std::to_string(d),
                              omega_presented(r, d, i)});
    }
    {
        Ring cone = parse_ring("QQ[z0,z1,z2,z3] mod=(z0*z3 - z1*z2)");
        Ideal M(cone, parse_poly_list(cone, "z0^2, z0*z1, z1^2"));
        auto Mmod = present_ideal_as_module(M);
        corpus.push_back({"cone ideal as module", Mmod.module});
        corpus.push_back({"cone perpendicular", perpendicular(Mmod.module).perp});
    }
    {
        Ring r = parse_ring("QQ[x,y]");
        corpus.push_back({"free rank 2", FPModule::free_module(r, 2)});
        PolyMatrix rel(r, 1, 1);
        rel.at(0, 0) = parse_poly(r, "x^2 + y^3");
        corpus.push_back({"cyclic R/(f)", FPModule(r, 1, rel)});
        corpus.push_back({"maximal ideal d=2", omega_presented(r, 2, 0)});
    }
    {
        Ring r = parse_ring("QQ[x,y,z]");
        for (int k = 0; k < randoms; ++k) {
            int n = (int)rng.integer(2, 3);
            int m = (int)rng.integer(1, 3);
            PolyMatrix rel(r, n, m);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) rel.at(i, j) = rng.random_form(r, (int)rng.integer(1, 2));
            corpus.push_back({"random module " + std::to_string(k + 1), FPModule(r, n, rel)});
        }
    }

    f.check_true("corpus size at least 20", corpus.size() >= 20,
                 std::to_string(corpus.size()) + " modules");
    long checked = 0;
    for (const auto& e : corpus) {
        const Ring& r = e.mod.ring();
        std::vector<FreeElement> elements;
        int n = e.mod.n_generators();
        for (int i = 0; i < std::min(n, 3); ++i) elements.push_back(FreeElement::unit(r, n, i));
        FreeElement mix(r, n);
        for (int i = 0; i < n; ++i) mix[i] = rng.random_form(r, 1);
        elements.push_back(mix);
        bool all_ok = true;
        for (const auto& x : elements) {
            Ideal a = order_ideal(e.mod, x, OrderIdealRoute::row_ideal).ideal;
            Ideal b = order_ideal(e.mod, x, OrderIdealRoute::dual_kernel).ideal;
            all_ok = all_ok && ideal_equal(a, b);
            ++checked;
        }
        f.check_true("routes agree: " + e.name, all_ok, "row-ideal vs dual-kernel");
    }
    f.check_true("element checks executed", checked >= (long)corpus.size(),
                 std::to_string(checked) + " order ideals");
}

void run_thm12_suite(FactSink& f, const nlohmann::json& p, Rng& rng, const Limits* limits) {
    int want = p.value("instances", 20);
    int n_cap = p.value("n_max", 3);
    Ring r = parse_ring("QQ[x,y,z]");
    int made = 0, attempts = 0;
    while (made < want && attempts < want * 30) {
        ++attempts;
        int k = (int)rng.integer(2, 4);
        std::vector<Polynomial> gens;
        for (int i = 0; i < k; ++i) {
            Polynomial m = rng.random_monomial(r, 3);
            if (m.is_unit_constant() || m.is_zero()) continue;
            gens.push_back(m);
        }
        if (gens.size() < 2) continue;
        Ideal I(r, gens);
        auto Imod = present_ideal_as_module(I);
        FPModule mini = minimalize(Imod.module);
        if (mini.n_generators() < 2) continue;
        std::vector<FreeElement> M;
        for (const auto& g : I.generators()) M.push_back(FreeElement(r, {g}));
        ReesPresentation rp = rees_of_module(r, M, limits);
        int t = rp.analytic_spread - 1;
        if (t < 1) continue;
        std::vector<FreeElement> U;
        for (int u = 0; u < t; ++u) {
            Polynomial comb(r);
            for (const auto& g : I.generators())
                comb = comb + Polynomial::constant(r, rng.integer(-3, 3)) * g;
            if (comb.is_zero()) comb = I.generators()[0];
            U.push_back(FreeElement(r, {comb}));
        }
        Thm12Report rep = theorem_1_2_check(r, M, U, n_cap, limits);
        ++made;
        std::string name = "instance " + std::to_string(made) + " (mu=" +
                           std::to_string(I.generators().size()) + ", t=" + std::to_string(t) + ")";
        bool ok = rep.obstruction_dim > 0 && rep.bound_holds && !rep.degreewise.confirmed;
        f.check(name, ok, "certified non-integral and ht(U:M) <= " + std::to_string(rep.bound),
                "obstruction=" + std::to_string(rep.obstruction_dim) + ", ht=" + ht_str(rep.colon),
                "t = l(M) - 1 forces a degree-1 fiber obstruction");
    }
    f.check_eq("randomized instances built", want, made, "");

    // The curve example: M = I as module, U = the first three generators.
    Ring rc = parse_ring("QQ[a,b,c,d]");
    auto gens = curve_generators(rc, 2);
    std::vector<FreeElement> M;
    for (const auto& g : gens) M.push_back(FreeElement(rc, {g}));
    std::vector<FreeElement> U(M.begin(), M.begin() + 3);
    Thm12Report rep = theorem_1_2_check(rc, M, U, n_cap, limits);
    f.check_true("curve perp instance certified non-integral", rep.obstruction_dim > 0,
                 "degree-1 fiber obstruction, dim = " + std::to_string(rep.obstruction_dim));
    f.check_true("curve perp instance satisfies the height bound",
                 rep.bound_holds && rep.colon.height.value_or(99) <= rep.bound,
                 "t=3, rank=1, ht(U:M)=" + ht_str(rep.colon) + " <= 3");
}

using RunnerFn = void (*)(FactSink&, const nlohmann::json&, Rng&, const Limits*);

struct ScenarioDef {
    const char* id;
    const char* defaults;
    RunnerFn fn;
};

const ScenarioDef kScenarios[] = {
    {"intro-chern", R"json({"n_min": 2, "n_max": 12})json", run_intro_chern},
    {"ex3.10", R"json({"alpha": 2})json", run_ex310},
    {"ex3.11", R"json({"n_max": 6, "coeff_candidates": [1, -1, 2, -2]})json", run_ex311},
    {"prop3.12", R"json({"d": 5, "i": 1, "field": "GF(32003)", "trials": 7})json", run_prop312},
    {"prop3.13", R"json({"d": 4, "s": 2})json", run_prop313},
    {"post4.1", R"json({})json", run_post41},
    {"thm5.5-curve", R"json({"alpha": 2})json", run_thm55},
    {"cor3.2-instance", R"json({"i_max": 5, "n_max": 3})json", run_cor32},
    {"prop3.14-spot", R"json({"t": 2, "s": 4, "field": "GF(32003)", "trials": 5, "max_draws": 10})json",
     run_prop314},
    {"rmk2.2-corpus", R"json({"random_modules": 6})json", run_rmk22_corpus},
    {"thm1.2-suite", R"json({"instances": 20, "n_max": 3})json", run_thm12_suite},
};

}  // namespace

std::vector<std::string> scenario_ids() {
    std::vector<std::string> out;
    for (const auto& s : kScenarios) out.push_back(s.id);
    return out;
}

nlohmann::json default_scenario_params(const std::string& id) {
    for (const auto& s : kScenarios)
        if (id == s.id) return nlohmann::json::parse(s.defaults);
    throw std::invalid_argument("unknown scenario id: " + id);
}

Report run_scenario(const std::string& id, const nlohmann::json& params_override,
                    std::uint64_t seed, const Limits* limits) {
    const ScenarioDef* def = nullptr;
    for (const auto& s : kScenarios)
        if (id == s.id) def = &s;
    if (!def) throw std::invalid_argument("unknown scenario id: " + id);

    nlohmann::json params = nlohmann::json::parse(def->defaults);
    if (params_override.is_object())
        for (auto it = params_override.begin(); it != params_override.end(); ++it)
            params[it.key()] = it.value();

    Report rep;
    rep.id = id;
    FactSink sink{rep};
    Rng rng = Rng::for_label(seed, id);
    auto t0 = std::chrono::steady_clock::now();
    try {
        def->fn(sink, params, rng, limits);
    } catch (const ResourceError& e) {
        rep.resource_skipped = true;
        sink.skip("scenario aborted", std::string("resource: ") + e.what());
    } catch (const std::exception& e) {
        sink.check("scenario threw", false, "no exception", e.what(), "");
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<Report> run_scenarios(const std::vector<std::string>& ids,
                                  const nlohmann::json& params_override, std::uint64_t seed,
                                  int jobs, const Limits* limits) {
    std::vector<Report> reports(ids.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            reports[i] = run_scenario(ids[i], params_override, seed, limits);
    } else {
        std::vector<std::future<Report>> futs;
        for (const auto& id : ids)
            futs.push_back(std::async(std::launch::async, [&, id] {
                return run_scenario(id, params_override, seed, limits);
            }));
        for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    }
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.id < b.id; });
    return reports;
}

}  // namespace oideal
