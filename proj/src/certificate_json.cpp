#include "cylcert/certificate.hpp"
#include "certificate_constants.hpp"

namespace cylcert {

nlohmann::json certificate_json(const Certificate& cert) {
    using nlohmann::json;
    json annuli = json::array();
    for (const auto& r : cert.annuli) {
        json ladder = json::array();
        for (const auto& [a, b] : r.ladder) ladder.push_back({a, b});
        annuli.push_back({{"alpha", r.alpha.sides},
                          {"opp_alpha", r.opp_alpha.sides},
                          {"ladder", ladder},
                          {"surface_parallel", r.surface_parallel}});
    }
    json opp = json::array();
    for (const auto& [cell, image] : cert.opp.cells) opp.push_back({cell, image});
    json witness = json::object();
    if (cert.selected >= 0) {
        const auto [alpha, image] = monodromy_witness(cert);
        witness = {{"alpha", alpha.sides}, {"image", image.sides}};
    }
    return {
        {"format", cert_consts::format},
        {"triangulation_sha256", cert.triangulation_sha256},
        {"surface_sha256", cert.surface_sha256},
        {"coloring_sha256", cert.coloring_sha256},
        {"coloring_parity_rule", cert_consts::parity_rule},
        {"positive_side", cert_consts::positive_side},
        {"coords", cert.coords},
        {"t", cert.t},
        {"genus", cert.genus},
        {"threshold_met", cert.threshold_met},
        {"essential_color", std::string(1, color_letter(cert.essential_color))},
        {"x_graph", cert.x_graph},
        {"x_faces", cert.x_cells},
        {"opp", opp},
        {"annuli", annuli},
        {"selected", cert.selected},
        {"witness", witness},
        {"verified_facts", cert_consts::verified_facts()},
    };
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump() + "\n"; }

}  // namespace cylcert
