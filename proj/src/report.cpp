#include "homoglab/report.hpp"

#include "json.hpp"

namespace homoglab {

bool ScenarioReport::has_diagnostic(const std::string& key) const {
    for (const auto& [k, v] : diagnostics)
        if (k == key) return true;
    return false;
}

std::string ScenarioReport::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["applicable"] = applicable;
    j["verdict"] = verdict;
    j["witnesses"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : witnesses) j["witnesses"][k] = v;
    j["conflictTrace"] = conflict_trace;
    j["diagnostics"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : diagnostics) j["diagnostics"][k] = v;
    return j.dump(2) + "\n";
}

std::string ScenarioReport::to_text() const {
    std::string out;
    out += "family: " + family + "\n";
    if (!applicable) {
        out += "verdict: INAPPLICABLE\n";
        for (const auto& [k, v] : diagnostics) out += k + ": " + v + "\n";
        return out;
    }
    for (const auto& [k, v] : witnesses) out += k + " = " + v + "\n";
    out += "verdict: " + verdict + "\n";
    for (const auto& line : conflict_trace) out += "conflict: " + line + "\n";
    for (const auto& [k, v] : diagnostics) out += k + ": " + v + "\n";
    return out;
}

}  // namespace homoglab
