#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homoglab/bipede.hpp"
#include "homoglab/crosscut.hpp"
#include "homoglab/distance_monoid.hpp"
#include "homoglab/equivalence.hpp"
#include "homoglab/extension.hpp"
#include "homoglab/generic_extend.hpp"
#include "homoglab/homogeneity.hpp"
#include "homoglab/indep.hpp"
#include "homoglab/metric_space.hpp"
#include "homoglab/omegapede.hpp"
#include "homoglab/remarks.hpp"
#include "homoglab/report.hpp"
#include "homoglab/structure.hpp"

namespace {

using namespace homoglab;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string label_list(const DistanceMonoid& m, const std::vector<int>& values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += m.labels[static_cast<size_t>(values[i])];
    }
    return out + "]";
}

std::vector<std::string> label_vector(const DistanceMonoid& m, const std::vector<int>& values) {
    std::vector<std::string> out;
    for (int v : values) out.push_back(m.labels[static_cast<size_t>(v)]);
    return out;
}

int run_monoid_check(const std::string& file, bool as_json) {
    const DistanceMonoid m = load_monoid(file);
    const std::vector<MonoidViolation> violations = check_monoid(m);
    if (as_json) {
        ordered_json j;
        j["file"] = file;
        j["ok"] = violations.empty();
        j["violations"] = ordered_json::array();
        for (const auto& v : violations)
            j["violations"].push_back({{"axiom", v.axiom},
                                       {"witness", v.witness},
                                       {"detail", v.detail}});
        std::cout << j.dump(2) << "\n";
    } else if (violations.empty()) {
        std::cout << "monoid ok: " << m.size() << " values, r_max="
                  << m.labels[static_cast<size_t>(m.rmax())] << "\n";
    } else {
        for (const auto& v : violations) std::cout << v.axiom << ": " << v.detail << "\n";
    }
    return violations.empty() ? kExitOk : kExitViolated;
}

int run_monoid_analyze(const std::string& file, bool as_json) {
    const DistanceMonoid m = load_monoid(file);
    const std::vector<MonoidViolation> violations = check_monoid(m);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << v.axiom << ": " << v.detail << "\n";
        return kExitViolated;
    }
    const SimplicityReport simp = is_simple(m);
    const std::vector<int> idem = idempotents(m);
    const std::vector<int> chain = coordinatization_chain(m);
    std::vector<std::string> equiv_names;
    for (const auto& d : definable_equivalences(m)) equiv_names.push_back(d.name);
    if (as_json) {
        ordered_json j;
        j["values"] = m.labels;
        j["simple"] = simp.simple;
        if (!simp.simple)
            j["simplicityWitness"] = {m.labels[static_cast<size_t>(simp.witness[0])],
                                      m.labels[static_cast<size_t>(simp.witness[1])]};
        j["idempotents"] = label_vector(m, idem);
        j["su_rank"] = su_rank(m);
        j["chain"] = label_vector(m, chain);
        j["equivalences"] = equiv_names;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "values=" << label_list(m, [&] {
            std::vector<int> all(static_cast<size_t>(m.size()));
            for (int i = 0; i < m.size(); ++i) all[static_cast<size_t>(i)] = i;
            return all;
        }()) << "\n";
        std::cout << "simple=" << (simp.simple ? "true" : "false") << "\n";
        if (!simp.simple)
            std::cout << "simplicity_witness=(r="
                      << m.labels[static_cast<size_t>(simp.witness[0])]
                      << ",s=" << m.labels[static_cast<size_t>(simp.witness[1])] << ")\n";
        std::cout << "idempotents=" << label_list(m, idem) << "\n";
        std::cout << "su_rank=" << su_rank(m) << "\n";
        std::cout << "chain=" << label_list(m, chain) << "\n";
        std::cout << "equivalences=";
        for (size_t i = 0; i < equiv_names.size(); ++i)
            std::cout << (i ? "," : "") << equiv_names[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int run_urysohn_build(const std::string& monoid_file, int n, int k, int mult,
                      const std::string& out_file, bool as_json) {
    const DistanceMonoid m = load_monoid(monoid_file);
    if (!check_monoid(m).empty()) {
        std::cerr << "monoid in " << monoid_file << " violates the axioms\n";
        return kExitViolated;
    }
    const RMetricSpace s = build_urysohn_space(m, n, k, mult);
    const std::vector<std::string> problems = check_space(s);
    if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << p << "\n";
        return kExitViolated;
    }
    save_space(s, out_file);
    if (as_json) {
        ordered_json j;
        j["points"] = s.n;
        j["monoid"] = m.labels;
        j["saturation"] = k;
        j["multiplicity"] = mult;
        j["output"] = out_file;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "built " << s.n << " points over " << m.size() << " distances -> "
                  << out_file << "\n";
    }
    return kExitOk;
}

int run_indep(const std::string& space_file, int a, int b, const std::vector<int>& base,
              int mult, int kcons, bool as_json) {
    const RMetricSpace s = load_space(space_file);
    for (int x : base)
        if (x < 0 || x >= s.n) throw std::invalid_argument("base element out of range");
    if (a < 0 || a >= s.n || b < 0 || b >= s.n)
        throw std::invalid_argument("element out of range");
    const Workbench wb = make_workbench(s);
    const bool closed = divides_closed(wb, a, b, base);
    IndependenceQuery q;
    q.a = {a};
    q.b = {b};
    q.base = base;
    const Tri oracle = divides_bruteforce(wb, q, mult, kcons);
    const int r = find_independence_distance(wb.space, a, base);
    const std::string oracle_text = oracle == Tri::yes      ? "divides"
                                    : oracle == Tri::no     ? "independent"
                                                            : "inconclusive";
    const bool agree = (oracle == Tri::yes && closed) || (oracle == Tri::no && !closed);
    if (as_json) {
        ordered_json j;
        j["a"] = a;
        j["b"] = b;
        j["base"] = base;
        j["distance"] = wb.space.monoid.labels[static_cast<size_t>(wb.space.d(a, b))];
        j["closedForm"] = closed ? "divides" : "independent";
        j["oracle"] = oracle_text;
        j["independenceDistance"] = wb.space.monoid.labels[static_cast<size_t>(r)];
        j["agreement"] = oracle == Tri::inconclusive ? "n/a" : (agree ? "yes" : "no");
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "d(a,b)=" << wb.space.monoid.labels[static_cast<size_t>(wb.space.d(a, b))]
                  << "\n";
        std::cout << "closed-form: " << (closed ? "divides" : "independent") << "\n";
        std::cout << "oracle: " << oracle_text << "\n";
        std::cout << "independence_distance="
                  << wb.space.monoid.labels[static_cast<size_t>(r)] << "\n";
    }
    if (oracle == Tri::inconclusive) return kExitInconclusive;
    return agree ? kExitOk : kExitViolated;
}

DistanceMonoid default_monoid() {
    const TruncatedResult r = truncated_monoid({0, 1, 3, 4});
    if (!r.ok) throw std::logic_error("built-in monoid failed validation");
    return r.monoid;
}

int run_extend_solve(const std::string& family, const std::string& problem_file,
                     const std::string& monoid_file, int n, int k, int mult, bool as_json) {
    FamilyHandle h;
    h.family = family_from_name(family);
    if (h.family == Family::urysohn)
        h.monoid = monoid_file.empty() ? default_monoid() : load_monoid(monoid_file);
    if (n <= 0) {
        switch (h.family) {
            case Family::urysohn: n = 15; break;
            case Family::crosscut: n = 27; break;
            case Family::bipede: n = 5; break;
            case Family::omegapede: n = 4; break;
        }
    }
    if (k <= 0) k = h.family == Family::urysohn ? 1 : 2;
    const Workbench wb = generic_workbench(h, n, k, mult);
    const ExtensionProblem problem = extension_problem_from_json(read_text_file(problem_file));
    const SolveResult res = extension_solve(wb, problem);
    const std::string verdict = res.verdict == SolveVerdict::sat     ? "SAT"
                                : res.verdict == SolveVerdict::unsat ? "UNSAT"
                                                                     : "INCONCLUSIVE";
    if (as_json) {
        ordered_json targets = ordered_json::array();
        for (const auto& t : problem.targets) targets.push_back({{"a", t.a}, {"b", t.b}});
        ordered_json j;
        j["targets"] = targets;
        j["verdict"] = verdict;
        j["witness"] = res.witness;
        j["conflict"] = res.conflict;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family: " << family_name(h.family) << " (" << wb.size()
                  << " elements)\n";
        std::cout << "verdict: " << verdict << "\n";
        for (size_t i = 0; i < res.witness.size(); ++i)
            std::cout << "witness[" << i << "] = " << res.witness_names[i] << " (id "
                      << res.witness[i] << ")\n";
        for (const auto& c : res.conflict) std::cout << "conflict: " << c << "\n";
        if (!res.note.empty()) std::cout << "note: " << res.note << "\n";
    }
    switch (res.verdict) {
        case SolveVerdict::sat: return kExitOk;
        case SolveVerdict::unsat: return kExitViolated;
        case SolveVerdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int diff_fixture(const std::string& regenerated, const std::string& fixture_file) {
    const std::string stored = read_text_file(fixture_file);
    if (stored == regenerated) return kExitOk;
    std::cerr << "fixture " << fixture_file << " differs from the regenerated object\n";
    return kExitViolated;
}

int run_example_verify(const std::string& name, const std::vector<int>& params,
                       const std::string& fixture_file, bool as_json) {
    ScenarioReport rep;
    std::string expected = "UNSAT";
    std::string regenerated;
    if (name == "crosscut") {
        CrosscutSpec spec;
        spec.np = params.size() > 0 ? params[0] : 3;
        spec.nq = params.size() > 1 ? params[1] : 3;
        spec.cell = params.size() > 2 ? params[2] : 3;
        const Crosscut c = build_crosscut(spec);
        rep = crosscut_counterexample(c);
        if (spec.np < 2 || spec.nq < 2) expected = "INAPPLICABLE";
        regenerated = structure_to_json(crosscut_to_structure(c));
    } else if (name == "bipede") {
        rep = bipede_counterexample();
        regenerated = structure_to_json(bipede_to_structure(build_bipede(5, 2, 3)));
    } else if (name == "omegapede") {
        rep = omegapede_counterexample();
        regenerated = structure_to_json(omegapede_to_structure(build_omegapede(3, 2, 4, 2, 3)));
    } else if (name == "remark41") {
        const int ground = params.size() > 0 ? params[0] : 6;
        const GraphFixture fx = triangular_graph_fixture(ground);
        rep = graph_fixture_scenario(fx, "remark41", 3);
        expected = "non-homogeneous";
        regenerated = structure_to_json(fx.graph);
    } else if (name == "remark46") {
        const int ground = params.size() > 0 ? params[0] : 8;
        const GraphFixture fx = rook_graph_fixture(ground);
        rep = graph_fixture_scenario(fx, "remark46", 4);
        expected = "non-homogeneous";
        regenerated = structure_to_json(fx.graph);
    } else {
        std::cerr << "unknown example: " << name << "\n";
        return kExitUsage;
    }
    std::cout << (as_json ? rep.to_json() : rep.to_text());
    if (rep.verdict != expected) {
        std::cerr << "expected verdict " << expected << ", got " << rep.verdict << "\n";
        return kExitViolated;
    }
    if (!fixture_file.empty()) return diff_fixture(regenerated, fixture_file);
    return kExitOk;
}

int run_equiv_discover(const std::string& file, bool as_json) {
    const FinStructure s = load_structure(file);
    const std::vector<EquivRelDescriptor> rels = discover_equiv_relations(s);
    if (as_json) {
        ordered_json j;
        j["count"] = rels.size();
        j["relations"] = ordered_json::array();
        for (const auto& r : rels) {
            std::vector<int> classes = relation_classes(s, r);
            std::sort(classes.begin(), classes.end());
            classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
            j["relations"].push_back(
                {{"name", r.name}, {"classes", classes.size()}, {"types", r.accepted.size()}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rels.size() << " relation(s)\n";
        for (const auto& r : rels) {
            std::vector<int> classes = relation_classes(s, r);
            std::sort(classes.begin(), classes.end());
            classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
            std::cout << r.name << ": " << classes.size() << " classes, "
                      << r.accepted.size() << " atomic types\n";
        }
    }
    return kExitOk;
}

int run_homog_check(const std::string& file, int k, bool as_json) {
    const FinStructure s = load_structure(file);
    const HomogeneityReport rep = is_homogeneous_upto(s, k);
    if (as_json) {
        ordered_json j;
        j["homogeneous"] = rep.homogeneous;
        j["checkedUpto"] = rep.checked_upto;
        if (rep.witness) {
            j["witness"] = {{"width", rep.witness->width},
                            {"first", rep.witness->first},
                            {"second", rep.witness->second}};
        }
        std::cout << j.dump(2) << "\n";
    } else if (rep.homogeneous) {
        std::cout << "homogeneous up to " << rep.checked_upto << "\n";
    } else {
        std::cout << "non-homogeneous at width " << rep.witness->width << "\n";
        auto tuple = [](const std::vector<int>& t) {
            std::string out;
            for (int x : t) out += (out.empty() ? "" : " ") + std::to_string(x);
            return out;
        };
        std::cout << "first:  " << tuple(rep.witness->first) << "\n";
        std::cout << "second: " << tuple(rep.witness->second) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homoglab: finite workbench for binary homogeneous structures"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable reports");
    const char* seed_env = std::getenv("HOMOGLAB_SEED");
    (void)seed_env;  // reserved; builders are deterministic

    int rc = kExitOk;

    auto* monoid = app.add_subcommand("monoid", "distance monoid tools");
    monoid->require_subcommand(1);
    {
        auto* check = monoid->add_subcommand("check", "validate the monoid axioms");
        check->fallthrough();
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file, "monoid JSON")->required();
        check->callback([&, file] { rc = run_monoid_check(*file, as_json); });

        auto* analyze = monoid->add_subcommand("analyze", "simplicity, idempotents, rank, chain");
        analyze->fallthrough();
        auto afile = std::make_shared<std::string>();
        analyze->add_option("file", *afile, "monoid JSON")->required();
        analyze->callback([&, afile] { rc = run_monoid_analyze(*afile, as_json); });
    }
    monoid->fallthrough();

    auto* urysohn = app.add_subcommand("urysohn", "metric space tools");
    urysohn->require_subcommand(1);
    {
        auto* build = urysohn->add_subcommand("build", "grow a saturated space");
        build->fallthrough();
        auto monoid_file = std::make_shared<std::string>();
        auto out_file = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(1);
        auto mult = std::make_shared<int>(3);
        build->add_option("--monoid", *monoid_file, "monoid JSON")->required();
        build->add_option("-n", *n, "point count")->required();
        build->add_option("-k", *k, "saturation level")->required();
        build->add_option("-o", *out_file, "output space JSON")->required();
        build->add_option("--mult", *mult, "witness multiplicity");
        build->callback(
            [&, monoid_file, n, k, mult, out_file] {
                rc = run_urysohn_build(*monoid_file, *n, *k, *mult, *out_file, as_json);
            });
    }
    urysohn->fallthrough();

    {
        auto* indep = app.add_subcommand("indep", "dividing: closed form against the oracle");
        indep->fallthrough();
        auto space_file = std::make_shared<std::string>();
        auto a = std::make_shared<int>(0);
        auto b = std::make_shared<int>(0);
        auto base = std::make_shared<std::vector<int>>();
        auto mult = std::make_shared<int>(3);
        auto kcons = std::make_shared<int>(3);
        indep->add_option("--space", *space_file, "space JSON")->required();
        indep->add_option("--a", *a, "element whose type is tested")->required();
        indep->add_option("--b", *b, "parameter element")->required();
        indep->add_option("--base", *base, "base elements")->delimiter(',');
        indep->add_option("--mult", *mult, "copies the oracle materializes");
        indep->add_option("--kcons", *kcons, "inconsistency width bound");
        indep->callback([&, space_file, a, b, base, mult, kcons] {
            rc = run_indep(*space_file, *a, *b, *base, *mult, *kcons, as_json);
        });
    }

    auto* extend = app.add_subcommand("extend", "extension problems");
    extend->require_subcommand(1);
    {
        auto* solve = extend->add_subcommand("solve", "solve a prescribed-type problem");
        solve->fallthrough();
        auto family = std::make_shared<std::string>();
        auto problem_file = std::make_shared<std::string>();
        auto monoid_file = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto mult = std::make_shared<int>(3);
        solve->add_option("--family", *family, "urysohn|crosscut|bipede|omegapede")->required();
        solve->add_option("--problem", *problem_file, "problem JSON")->required();
        solve->add_option("--monoid", *monoid_file, "monoid JSON (urysohn)");
        solve->add_option("-n", *n, "fragment size (family-specific)");
        solve->add_option("-k", *k, "saturation level");
        solve->add_option("--mult", *mult, "witness multiplicity");
        solve->callback([&, family, problem_file, monoid_file, n, k, mult] {
            rc = run_extend_solve(*family, *problem_file, *monoid_file, *n, *k, *mult, as_json);
        });
    }
    extend->fallthrough();

    {
        auto* example = app.add_subcommand("example", "worked scenarios");
        example->require_subcommand(1);
        auto* verify = example->add_subcommand("verify", "regenerate a scenario and check it");
        verify->fallthrough();
        auto name = std::make_shared<std::string>();
        auto params = std::make_shared<std::vector<int>>();
        auto fixture = std::make_shared<std::string>();
        verify->add_option("name", *name, "crosscut|bipede|omegapede|remark41|remark46")
            ->required();
        verify->add_option("params", *params, "family parameters");
        verify->add_option("--fixture", *fixture, "diff the regenerated structure against this file");
        verify->callback([&, name, params, fixture] {
            rc = run_example_verify(*name, *params, *fixture, as_json);
        });
        example->fallthrough();
    }

    {
        auto* equiv = app.add_subcommand("equiv", "definable equivalence relations");
        equiv->require_subcommand(1);
        auto* discover = equiv->add_subcommand("discover", "find transitive unions of 2-types");
        discover->fallthrough();
        auto file = std::make_shared<std::string>();
        discover->add_option("--structure", *file, "structure JSON")->required();
        discover->callback([&, file] { rc = run_equiv_discover(*file, as_json); });
        equiv->fallthrough();
    }

    {
        auto* homog = app.add_subcommand("homog", "bounded homogeneity checking");
        homog->require_subcommand(1);
        auto* check = homog->add_subcommand("check", "partial isomorphism extension test");
        check->fallthrough();
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<int>(2);
        check->add_option("--structure", *file, "structure JSON")->required();
        check->add_option("-k", *k, "maximum substructure size")->required();
        check->callback([&, file, k] { rc = run_homog_check(*file, *k, as_json); });
        homog->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolated;
    }
    return rc;
}
