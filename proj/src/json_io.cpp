#include "oideal/json_io.hpp"

#include "oideal/parse.hpp"

namespace oideal {

std::vector<std::string> poly_strings(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

nlohmann::json ring_polys_json(const Ring& r, const std::vector<Polynomial>& polys) {
    return nlohmann::json{{"ring", r.to_string()}, {"polys", poly_strings(polys)}};
}

nlohmann::json height_json(const HeightReport& h) {
    nlohmann::json j;
    j["dim"] = h.dim_quotient;
    if (h.height)
        j["height"] = *h.height;
    else
        j["height"] = "unit";
    j["method"] = h.probabilistic ? "probabilistic" : "exact";
    if (h.probabilistic) {
        j["trials"] = h.trials;
        if (h.prime) j["p"] = h.prime;
    }
    return j;
}

nlohmann::json reduction_json(const ReductionResult& r) {
    nlohmann::json j{{"confirmed", r.confirmed}};
    if (r.confirmed) j["n"] = r.n;
    j["n_max"] = r.cap;
    return nlohmann::json{{"reduction", std::move(j)}};
}

nlohmann::json reduction_json(const ReductionCertificate& r) {
    nlohmann::json j{{"confirmed", r.confirmed}};
    if (r.confirmed) j["n"] = r.n;
    j["n_max"] = r.cap;
    return nlohmann::json{{"reduction", std::move(j)}};
}

nlohmann::json module_to_json(const FPModule& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.n_generators(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.relations().cols(); ++j) row.push_back(m.relations().at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{
        {"ring", m.ring().to_string()}, {"generators", m.n_generators()}, {"relations", std::move(rows)}};
}

FPModule module_from_json(const nlohmann::json& j) {
    Ring r = parse_ring(j.at("ring").get<std::string>());
    int n = j.at("generators").get<int>();
    const auto& rows = j.at("relations");
    int cols = rows.empty() ? 0 : (int)rows.at(0).size();
    PolyMatrix rel(r, n, cols);
    if ((int)rows.size() != n && !(rows.empty() && n >= 0))
        throw std::invalid_argument("relations must have one row per generator");
    for (int i = 0; i < (int)rows.size(); ++i) {
        if ((int)rows.at((std::size_t)i).size() != cols)
            throw std::invalid_argument("ragged relation rows");
        for (int c = 0; c < cols; ++c)
            rel.at(i, c) = parse_poly(r, rows.at((std::size_t)i).at((std::size_t)c).get<std::string>());
    }
    return FPModule(r, n, std::move(rel));
}

nlohmann::json free_element_json(const FreeElement& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : v.coords()) a.push_back(c.to_string());
    return a;
}

nlohmann::json rees_json(const ReesPresentation& rp) {
    return nlohmann::json{{"analytic_spread", rp.analytic_spread},
                          {"rees_ring", rp.rees_ring.to_string()},
                          {"rees_ideal", poly_strings(rp.rees_ideal.generators())},
                          {"fiber_ring", rp.fiber_ring.to_string()},
                          {"fiber_ideal", poly_strings(rp.fiber_ideal.generators())},
                          {"rank", rp.module_rank}};
}

}  // namespace oideal
