#ifndef OIDEAL_JSON_IO_HPP
#define OIDEAL_JSON_IO_HPP

#include <json.hpp>

#include "oideal/fpmodule.hpp"
#include "oideal/rees.hpp"

namespace oideal {

/// {"ring": string, "polys": [string]} with canonical printing.
nlohmann::json ring_polys_json(const Ring& r, const std::vector<Polynomial>& polys);

nlohmann::json height_json(const HeightReport& h);
nlohmann::json reduction_json(const ReductionResult& r);
nlohmann::json reduction_json(const ReductionCertificate& r);

/// {"ring": string, "generators": int, "relations": [[poly-string]]}
/// (relations listed by rows, one row per generator).
nlohmann::json module_to_json(const FPModule& m);
FPModule module_from_json(const nlohmann::json& j);

nlohmann::json rees_json(const ReesPresentation& rp);

std::vector<std::string> poly_strings(const std::vector<Polynomial>& polys);
nlohmann::json free_element_json(const FreeElement& v);

}  // namespace oideal

#endif
