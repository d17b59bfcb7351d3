#ifndef OIDEAL_SCENARIOS_HPP
#define OIDEAL_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "oideal/groebner.hpp"

namespace oideal {

enum class FactStatus { PASS, FAIL, SKIP };

struct FactOutcome {
    std::string name;
    FactStatus status = FactStatus::PASS;
    std::string expected;
    std::string computed;
    std::string note;  // provenance or skip reason
};

struct Report {
    std::string id;
    std::vector<FactOutcome> facts;
    double seconds = 0.0;
    bool resource_skipped = false;

    bool ok() const;
    /// SKIPs that are part of the scenario contract (not resource limits).
    nlohmann::json to_json() const;
    std::string pretty() const;
};

/// Known scenario ids, in canonical order.
std::vector<std::string> scenario_ids();

/// Embedded default parameters for a scenario (also shipped as
/// scenarios/<id>.json).
nlohmann::json default_scenario_params(const std::string& id);

/// Execute one scenario. params override the embedded defaults key-by-key;
/// execution is deterministic given parameters and seed. Resource errors
/// surface as SKIP(resource) outcomes, never as exceptions.
Report run_scenario(const std::string& id, const nlohmann::json& params_override,
                    std::uint64_t seed, const Limits* limits = nullptr);

/// Run several scenarios, optionally concurrently; reports come back ordered
/// by scenario id regardless of completion order.
std::vector<Report> run_scenarios(const std::vector<std::string>& ids,
                                  const nlohmann::json& params_override, std::uint64_t seed,
                                  int jobs, const Limits* limits = nullptr);

}  // namespace oideal

#endif
