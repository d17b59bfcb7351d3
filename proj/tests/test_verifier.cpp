#include <doctest.h>

#include "oideal/chern.hpp"
#include "oideal/scenarios.hpp"

using namespace oideal;

TEST_CASE("chern parity values") {
    CHECK(chern_top_coefficient(4) == 0);
    CHECK(chern_top_coefficient(5) == 1);
    CHECK(chern_top_coefficient(2) == 0);
    for (int n = 2; n <= 12; ++n) {
        CHECK(chern_top_coefficient(n) == chern_alternating_sum(n));
        CHECK(chern_top_coefficient(n) == (n % 2 == 0 ? 0 : 1));
    }
    CHECK_THROWS_AS(chern_top_coefficient(1), std::invalid_argument);
}

TEST_CASE("scenario registry") {
    auto ids = scenario_ids();
    CHECK(ids.size() == 11);
    CHECK(default_scenario_params("ex3.10")["alpha"] == 2);
    CHECK_THROWS_AS(default_scenario_params("nope"), std::invalid_argument);
    CHECK_THROWS_AS(run_scenario("nope", {}, 42), std::invalid_argument);
}

TEST_CASE("fast scenarios pass") {
    for (const char* id : {"intro-chern", "prop3.13", "post4.1", "prop3.12"}) {
        Report rep = run_scenario(id, nlohmann::json::object(), 42);
        CHECK(rep.ok());
    }
}

TEST_CASE("parameter overrides reach the scenario") {
    Report rep = run_scenario("prop3.13", nlohmann::json{{"d", 6}, {"s", 3}}, 42);
    CHECK(rep.ok());
    bool found = false;
    for (const auto& fact : rep.facts)
        found = found || fact.name.find("z6") != std::string::npos;
    CHECK(found);
}

TEST_CASE("reports are deterministic modulo timing") {
    auto strip = [](nlohmann::json j) {
        j.erase("seconds");
        return j;
    };
    Report a = run_scenario("prop3.12", nlohmann::json::object(), 42);
    Report b = run_scenario("prop3.12", nlohmann::json::object(), 42);
    CHECK(strip(a.to_json()) == strip(b.to_json()));

    // concurrent execution returns reports sorted by id
    auto reports = run_scenarios({"post4.1", "intro-chern"}, nlohmann::json::object(), 42, 2);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].id == "intro-chern");
    CHECK(reports[1].id == "post4.1");
}

TEST_CASE("resource limits surface as skip outcomes") {
    Limits lim;
    lim.max_pairs = 1;
    Report rep = run_scenario("ex3.10", nlohmann::json::object(), 42, &lim);
    CHECK(rep.resource_skipped);
    bool has_skip = false;
    for (const auto& f : rep.facts) has_skip = has_skip || f.status == FactStatus::SKIP;
    CHECK(has_skip);
}

TEST_CASE("the expected skip is present in ex3.11") {
    Report rep = run_scenario("ex3.11", nlohmann::json::object(), 42);
    CHECK(rep.ok());
    int skips = 0;
    for (const auto& f : rep.facts)
        if (f.status == FactStatus::SKIP) ++skips;
    CHECK(skips == 1);
}
