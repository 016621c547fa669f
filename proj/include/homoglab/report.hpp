#pragma once
// Shared report shape for the worked counterexample scenarios.

#include <string>
#include <utility>
#include <vector>

namespace homoglab {

struct ScenarioReport {
    std::string family;
    bool applicable = true;
    std::string verdict;  // "UNSAT", "SAT", "INAPPLICABLE"
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::string> conflict_trace;
    std::vector<std::pair<std::string, std::string>> diagnostics;

    bool has_diagnostic(const std::string& key) const;
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace homoglab
