#include "homoglab/crosscut.hpp"

#include <stdexcept>

#include "homoglab/extension.hpp"
#include "homoglab/indep.hpp"

namespace homoglab {

int Crosscut::p_class(int x) const {
    if (x < grid_size()) return x / (spec.nq * spec.cell);
    return extra[static_cast<size_t>(x - grid_size())].first;
}

int Crosscut::q_class(int x) const {
    if (x < grid_size()) return (x / spec.cell) % spec.nq;
    return extra[static_cast<size_t>(x - grid_size())].second;
}

int Crosscut::add_point(int p, int q) {
    extra.emplace_back(p, q);
    return size() - 1;
}

Crosscut build_crosscut(const CrosscutSpec& spec) {
    if (spec.np < 1 || spec.nq < 1 || spec.cell < 1)
        throw std::invalid_argument("crosscut: class counts and cell size must be positive");
    Crosscut c;
    c.spec = spec;
    return c;
}

FinStructure crosscut_to_structure(const Crosscut& c) {
    FinStructure s(make_signature({{"P", 2}, {"Q", 2}}), c.size());
    const int p = s.signature().index_of("P");
    const int q = s.signature().index_of("Q");
    for (int x = 0; x < c.size(); ++x)
        for (int y = 0; y < c.size(); ++y) {
            if (c.same_p(x, y)) s.add(p, x, y);
            if (c.same_q(x, y)) s.add(q, x, y);
        }
    s.canonicalize();
    return s;
}

ScenarioReport crosscut_counterexample(const Crosscut& c) {
    ScenarioReport rep;
    rep.family = "crosscut";
    if (c.spec.np < 2 || c.spec.nq < 2) {
        rep.applicable = false;
        rep.verdict = "INAPPLICABLE";
        rep.diagnostics.emplace_back("reason", "needs two P-classes and two Q-classes");
        return rep;
    }

    const int a = c.element(0, 0, 0);
    const int b = c.element(1, 0, 0);
    const int cc = c.element(0, 1, 0);
    const int d = c.element(1, 1, 0);
    rep.witnesses.emplace_back("a", element_desc_crosscut(c, a));
    rep.witnesses.emplace_back("b", element_desc_crosscut(c, b));
    rep.witnesses.emplace_back("c", element_desc_crosscut(c, cc));
    rep.witnesses.emplace_back("d", element_desc_crosscut(c, d));

    Workbench wb = make_workbench(c);
    const ImaginaryBase cls{"Q", cc};
    const bool cd_indep = !divides_over_class(wb, cc, {d}, cls);
    const bool ac_dep = divides_over_class(wb, a, {cc}, cls);
    const bool bd_dep = divides_over_class(wb, b, {d}, cls);
    rep.diagnostics.emplace_back("c indep d over class", cd_indep ? "true" : "false");
    rep.diagnostics.emplace_back("a divides over c", ac_dep ? "true" : "false");
    rep.diagnostics.emplace_back("b divides over d", bd_dep ? "true" : "false");

    const SolveResult sol = solve_two_type(wb, a, cc, b, {d});
    rep.conflict_trace = sol.conflict;
    if (sol.verdict == SolveVerdict::unsat && cd_indep && ac_dep && bd_dep) {
        rep.verdict = "UNSAT";
        rep.conflict_trace.push_back("P(e,c) ∧ P(e,d) forces P(c,d)");
    } else {
        rep.verdict = "UNEXPECTED";
    }
    return rep;
}

std::string element_desc_crosscut(const Crosscut& c, int x) {
    return "P-class " + std::to_string(c.p_class(x)) + ", Q-class " +
           std::to_string(c.q_class(x));
}

}  // namespace homoglab
