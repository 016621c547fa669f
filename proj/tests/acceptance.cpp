// Acceptance checks for the workbench. Each criterion prints one PASS/FAIL
// line; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "homoglab/atomic_type.hpp"
#include "homoglab/bipede.hpp"
#include "homoglab/crosscut.hpp"
#include "homoglab/distance_monoid.hpp"
#include "homoglab/embedding.hpp"
#include "homoglab/equivalence.hpp"
#include "homoglab/extension.hpp"
#include "homoglab/generic_extend.hpp"
#include "homoglab/homogeneity.hpp"
#include "homoglab/indep.hpp"
#include "homoglab/metric_space.hpp"
#include "homoglab/omegapede.hpp"
#include "homoglab/remarks.hpp"
#include "homoglab/structure.hpp"

using namespace homoglab;

namespace {

// Hard limits, milliseconds.
constexpr long kMonoidMs = 1000;
constexpr long kAgreementMs = 300000;
constexpr long kScenarioMs = 60000;
constexpr long kSoundnessMs = 600000;
constexpr int kSoundnessInstances = 1000;
constexpr int kClosureRounds = 500;

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

std::string labels_of(const DistanceMonoid& m, const std::vector<int>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += m.labels[static_cast<size_t>(xs[i])];
    }
    return out + "]";
}

std::vector<std::vector<int>> bases_upto_two(int n) {
    std::vector<std::vector<int>> out;
    out.push_back({});
    for (int x = 0; x < n; ++x) out.push_back({x});
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) out.push_back({x, y});
    return out;
}

DistanceMonoid fixture_monoid(bool wide) {
    const TruncatedResult tr =
        wide ? truncated_monoid({0, 1, 3, 4}) : truncated_monoid({0, 1, 2});
    if (!tr.ok) throw std::runtime_error("fixture monoid rejected");
    return tr.monoid;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome monoid_calculus() {
    const auto start = Clock::now();
    const DistanceMonoid a = fixture_monoid(true);
    const DistanceMonoid b = fixture_monoid(false);
    bool ok = is_simple(a).simple && is_simple(b).simple;
    ok = ok && labels_of(a, idempotents(a)) == "[0,1,4]";
    ok = ok && su_rank(a) == 2;
    ok = ok && labels_of(a, coordinatization_chain(a)) == "[1,0]";
    ok = ok && labels_of(b, idempotents(b)) == "[0,2]";
    ok = ok && su_rank(b) == 1;
    ok = ok && labels_of(b, coordinatization_chain(b)) == "[0]";
    const long ms = ms_since(start);
    if (!ok) return {false, "invariant mismatch"};
    if (ms >= kMonoidMs) return {false, std::to_string(ms) + " ms exceeds the limit"};
    return {true, "both fixture monoids exact, " + std::to_string(ms) + " ms"};
}

Outcome metric_agreement() {
    const auto start = Clock::now();
    long queries = 0, mismatches = 0, inconclusive = 0;
    for (const bool wide : {true, false}) {
        const Workbench wb =
            make_workbench(build_urysohn_space(fixture_monoid(wide), wide ? 15 : 10, 1, 3));
        const auto bases = bases_upto_two(wb.size());
        for (int a = 0; a < wb.size(); ++a)
            for (int b = 0; b < wb.size(); ++b)
                for (const auto& base : bases) {
                    ++queries;
                    IndependenceQuery q;
                    q.a = {a};
                    q.b = {b};
                    q.base = base;
                    const Tri brute = divides_bruteforce(wb, q);
                    if (brute == Tri::inconclusive) {
                        ++inconclusive;
                        continue;
                    }
                    if (divides_closed(wb, a, b, base) != (brute == Tri::yes)) ++mismatches;
                }
    }
    const long ms = ms_since(start);
    const std::string detail = std::to_string(queries) + " queries, " +
                               std::to_string(mismatches) + " mismatches, " +
                               std::to_string(inconclusive) + " inconclusive, " +
                               std::to_string(ms) + " ms";
    return {mismatches == 0 && inconclusive == 0 && ms < kAgreementMs, detail};
}

Outcome worked_counterexamples() {
    std::string detail;
    bool pass = true;
    const auto check = [&](const char* name, const ScenarioReport& rep, long ms,
                           const std::vector<std::string>& lines,
                           const std::vector<std::pair<std::string, std::string>>& diags) {
        bool ok = rep.applicable && rep.verdict == "UNSAT";
        for (const auto& line : lines)
            ok = ok && std::find(rep.conflict_trace.begin(), rep.conflict_trace.end(),
                                 line) != rep.conflict_trace.end();
        for (const auto& want : diags) {
            bool found = false;
            for (const auto& d : rep.diagnostics)
                if (d == want) found = true;
            ok = ok && found;
        }
        ok = ok && ms < kScenarioMs;
        detail += std::string(name) + (ok ? " ok" : " FAILED") + " " +
                  std::to_string(ms) + " ms; ";
        pass = pass && ok;
    };
    auto t0 = Clock::now();
    const ScenarioReport cc = crosscut_counterexample(build_crosscut({3, 3, 3}));
    check("crosscut", cc, ms_since(t0), {"P(e,c) ∧ P(e,d) forces P(c,d)"},
          {{"c indep d over class", "true"}});
    t0 = Clock::now();
    const ScenarioReport bp = bipede_counterexample();
    check("bipede", bp, ms_since(t0), {"R(e,m) contradicts tp(e,d)=tp(b,d)"}, {});
    t0 = Clock::now();
    const ScenarioReport om = omegapede_counterexample();
    check("omegapede", om, ms_since(t0), {"L(e,c)", "L(e,d)"},
          {{"types over class object equal", "true"},
           {"types over class acl equal", "false"}});
    return {pass, detail};
}

Outcome merge_soundness() {
    const auto start = Clock::now();
    std::string detail;
    bool pass = true;
    struct Case {
        const char* name;
        Workbench wb;
    };
    std::vector<Case> cases;
    cases.push_back(
        {"urysohn", make_workbench(build_urysohn_space(fixture_monoid(true), 15, 1, 3))});
    cases.push_back({"crosscut", make_workbench(build_crosscut({3, 3, 3}))});
    cases.push_back({"bipede", make_workbench(build_bipede(5, 2, 3))});
    cases.push_back({"omegapede", make_workbench(build_omegapede(3, 2, 4, 2, 3))});
    for (const auto& cs : cases) {
        std::mt19937 rng(0x50a9d);
        std::uniform_int_distribution<int> pick(0, cs.wb.size() - 1);
        int sat = 0, checked = 0;
        long draws = 0;
        while (checked < kSoundnessInstances && draws < 4000000) {
            ++draws;
            const int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
            if (a == b || c == d) continue;
            const ImaginaryBase cls = find_independence_relation(cs.wb, c, {d});
            if (cls.relation.empty()) continue;
            if (!check_premises(cs.wb, a, b, c, {d}, cls).all()) continue;
            ++checked;
            if (solve_two_type(cs.wb, a, c, b, {d}).verdict == SolveVerdict::sat) ++sat;
        }
        pass = pass && checked >= kSoundnessInstances && sat == checked;
        detail += std::string(cs.name) + " " + std::to_string(sat) + "/" +
                  std::to_string(checked) + "; ";
    }
    const long ms = ms_since(start);
    return {pass && ms < kSoundnessMs, detail + std::to_string(ms) + " ms"};
}

// Smallest-member class labels of an equivalence relation given as a predicate,
// matching the relation_classes convention.
std::vector<int> classes_by(int n, const std::function<bool(int, int)>& rel) {
    std::vector<int> label(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        label[static_cast<size_t>(x)] = x;
        for (int y = 0; y < x; ++y)
            if (rel(x, y)) {
                label[static_cast<size_t>(x)] = label[static_cast<size_t>(y)];
                break;
            }
    }
    return label;
}

Outcome equivalence_discovery() {
    std::string detail;
    bool pass = true;

    const BipedeFragment bp = build_bipede(5, 2, 3);
    const FinStructure red = bipede_reduct(bp);
    const auto found_b = discover_equiv_relations(red);
    const std::vector<int> by_blue =
        classes_by(red.size(), [&](int x, int y) { return bp.blue_foot(x) == bp.blue_foot(y); });
    const std::vector<int> by_red =
        classes_by(red.size(), [&](int x, int y) { return bp.red_foot(x) == bp.red_foot(y); });
    std::vector<std::vector<int>> got;
    for (const auto& r : found_b) got.push_back(relation_classes(red, r));
    std::sort(got.begin(), got.end());
    std::vector<std::vector<int>> want{by_blue, by_red};
    std::sort(want.begin(), want.end());
    bool ok = found_b.size() == 2 && got == want;
    if (ok) {
        const auto meet = intersect_descriptors(found_b[0], found_b[1], "meet");
        const auto meet_classes = relation_classes(red, meet);
        for (int x = 0; x < red.size(); ++x) ok = ok && meet_classes[static_cast<size_t>(x)] == x;
    }
    detail += std::string("bipede ") + (ok ? "{EB,ER} with equality meet" : "MISMATCH") + "; ";
    pass = pass && ok;

    const Crosscut cc = build_crosscut({3, 3, 3});
    const FinStructure cs = crosscut_to_structure(cc);
    const auto found_c = discover_equiv_relations(cs);
    std::vector<std::vector<int>> got_c;
    for (const auto& r : found_c) got_c.push_back(relation_classes(cs, r));
    std::sort(got_c.begin(), got_c.end());
    std::vector<std::vector<int>> want_c{
        classes_by(cs.size(), [&](int x, int y) { return cc.same_p(x, y); }),
        classes_by(cs.size(), [&](int x, int y) { return cc.same_q(x, y); }),
        classes_by(cs.size(),
                   [&](int x, int y) { return cc.same_p(x, y) && cc.same_q(x, y); })};
    std::sort(want_c.begin(), want_c.end());
    const bool ok_c = found_c.size() == 3 && got_c == want_c;
    detail += std::string("crosscut ") + (ok_c ? "{P,Q,PQ}" : "MISMATCH");
    pass = pass && ok_c;
    return {pass, detail};
}

Outcome closure_and_dividing() {
    std::string detail;
    bool pass = true;

    // Closure laws on random subsets of the saturated fragment.
    const BipedeFragment big = build_bipede(5, 2, 3);
    const int universe = big.feet + big.body_count();
    std::mt19937 rng(0xc105);
    std::uniform_int_distribution<int> pick(0, universe - 1);
    int law_failures = 0;
    for (int round = 0; round < kClosureRounds; ++round) {
        std::vector<int> xs;
        for (int i = 0; i < round % 6; ++i) xs.push_back(pick(rng));
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        const auto cl1 = bipede_cl(big, xs);
        for (int x : xs)
            if (!std::binary_search(cl1.begin(), cl1.end(), x)) ++law_failures;
        if (bipede_cl(big, cl1) != cl1) ++law_failures;
        std::vector<int> more = xs;
        more.push_back(pick(rng));
        std::sort(more.begin(), more.end());
        more.erase(std::unique(more.begin(), more.end()), more.end());
        const auto cl2 = bipede_cl(big, more);
        for (int x : cl1)
            if (!std::binary_search(cl2.begin(), cl2.end(), x)) ++law_failures;
    }
    detail += std::to_string(kClosureRounds) + " closure rounds, " +
              std::to_string(law_failures) + " law failures; ";
    pass = pass && law_failures == 0;

    // Exhaustive closed-form vs oracle sweep on a small saturated fragment.
    const auto start = Clock::now();
    const BipedeFragment small = build_bipede(2, 1, 3);
    const Workbench wb = make_workbench(small);
    const auto bases = bases_upto_two(wb.size());
    long queries = 0, mismatches = 0, inconclusive = 0;
    for (int a = 0; a < wb.size(); ++a)
        for (int b = 0; b < wb.size(); ++b)
            for (const auto& base : bases) {
                ++queries;
                IndependenceQuery q;
                q.a = {a};
                q.b = {b};
                q.base = base;
                const Tri brute = divides_bruteforce(wb, q);
                if (brute == Tri::inconclusive) {
                    ++inconclusive;
                    continue;
                }
                if (divides_bipede(small, {a}, {b}, base) != (brute == Tri::yes)) ++mismatches;
            }
    detail += std::to_string(queries) + " dividing queries, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(inconclusive) + " inconclusive, " +
              std::to_string(ms_since(start)) + " ms";
    pass = pass && mismatches == 0 && inconclusive == 0;
    return {pass, detail};
}

Outcome nonhomogeneous_fixtures() {
    std::string detail;
    bool pass = true;
    const auto run = [&](const char* name, const GraphFixture& fx, int k) {
        const HomogeneityReport rep = is_homogeneous_upto(fx.graph, k);
        bool ok = !rep.homogeneous && rep.witness.has_value();
        if (ok) {
            const auto& w = *rep.witness;
            ok = atp(fx.graph, w.first) == atp(fx.graph, w.second);
        }
        // The designated tuples agree on atomic type yet admit no automorphism.
        ok = ok && atp(fx.graph, fx.witness_first) == atp(fx.graph, fx.witness_second);
        ok = ok && !has_automorphism_mapping(fx.graph, fx.witness_first, fx.witness_second);
        detail += std::string(name) + (ok ? " flagged" : " MISSED") + "; ";
        pass = pass && ok;
    };
    run("pair-intersection graph", triangular_graph_fixture(6), 3);
    run("grid graph", rook_graph_fixture(8), 4);
    const FinStructure cs = crosscut_to_structure(build_crosscut({3, 3, 3}));
    const HomogeneityReport hom = is_homogeneous_upto(cs, 3);
    detail += std::string("crosscut homogeneous up to 3: ") + (hom.homogeneous ? "yes" : "NO");
    pass = pass && hom.homogeneous;
    return {pass, detail};
}

Outcome determinism() {
    int diffs = 0;
    const auto twice_equal = [&](const std::string& x, const std::string& y) {
        if (x != y) ++diffs;
    };

    twice_equal(monoid_to_json(fixture_monoid(true)), monoid_to_json(fixture_monoid(true)));
    twice_equal(space_to_json(build_urysohn_space(fixture_monoid(true), 15, 1, 3)),
                space_to_json(build_urysohn_space(fixture_monoid(true), 15, 1, 3)));
    twice_equal(structure_to_json(crosscut_to_structure(build_crosscut({3, 3, 3}))),
                structure_to_json(crosscut_to_structure(build_crosscut({3, 3, 3}))));
    twice_equal(structure_to_json(bipede_to_structure(build_bipede(5, 2, 3))),
                structure_to_json(bipede_to_structure(build_bipede(5, 2, 3))));
    twice_equal(structure_to_json(omegapede_to_structure(build_omegapede(3, 2, 4, 2, 3))),
                structure_to_json(omegapede_to_structure(build_omegapede(3, 2, 4, 2, 3))));

    FamilyHandle fh;
    fh.family = Family::bipede;
    twice_equal(structure_to_json(generic_extend(fh, 5, 2)),
                structure_to_json(generic_extend(fh, 5, 2)));

    const auto solve_bytes = [](const Workbench& wb, int a, int c, int b, int d) {
        return solve_result_to_json(solve_two_type(wb, a, c, b, {d}));
    };
    const Workbench wu = make_workbench(build_urysohn_space(fixture_monoid(true), 15, 1, 3));
    twice_equal(solve_bytes(wu, 0, 2, 1, 3), solve_bytes(wu, 0, 2, 1, 3));
    const Workbench wc = make_workbench(build_crosscut({3, 3, 3}));
    twice_equal(solve_bytes(wc, 0, 4, 1, 5), solve_bytes(wc, 0, 4, 1, 5));
    const Workbench wbp = make_workbench(build_bipede(5, 2, 3));
    twice_equal(solve_bytes(wbp, 0, 2, 1, 3), solve_bytes(wbp, 0, 2, 1, 3));
    const Workbench wo = make_workbench(build_omegapede(3, 2, 4, 2, 3));
    twice_equal(solve_bytes(wo, 0, 2, 1, 3), solve_bytes(wo, 0, 2, 1, 3));

    twice_equal(crosscut_counterexample(build_crosscut({3, 3, 3})).to_json(),
                crosscut_counterexample(build_crosscut({3, 3, 3})).to_json());
    twice_equal(bipede_counterexample().to_json(), bipede_counterexample().to_json());
    twice_equal(omegapede_counterexample().to_json(), omegapede_counterexample().to_json());

    const auto discovery_bytes = [] {
        const FinStructure red = bipede_reduct(build_bipede(5, 2, 3));
        std::string out;
        for (const auto& r : discover_equiv_relations(red)) {
            out += r.name + ":";
            for (int c : relation_classes(red, r)) out += std::to_string(c) + ",";
            out += ";";
        }
        return out;
    };
    twice_equal(discovery_bytes(), discovery_bytes());

    if (diffs) return {false, std::to_string(diffs) + " rerun(s) differed"};
    return {true, "all builders, solvers and reports byte-identical on rerun"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"monoid calculus", monoid_calculus},
        {"metric dividing agreement", metric_agreement},
        {"worked counterexamples", worked_counterexamples},
        {"merge soundness", merge_soundness},
        {"equivalence discovery", equivalence_discovery},
        {"closure and dividing fidelity", closure_and_dividing},
        {"non-homogeneity fixtures", nonhomogeneous_fixtures},
        {"determinism", determinism},
    };
    int failures = 0;
    for (size_t i = 0; i < std::size(criteria); ++i) {
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.pass) ++failures;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, criteria[i].name,
                    out.pass ? "PASS" : "FAIL", out.detail.c_str());
    }
    return failures;
}
