#include "homoglab/remarks.hpp"

#include <stdexcept>
#include <utility>

#include "homoglab/atomic_type.hpp"
#include "homoglab/embedding.hpp"
#include "homoglab/homogeneity.hpp"

namespace homoglab {

namespace {

GraphFixture intersection_graph(const std::vector<std::pair<int, int>>& pairs) {
    GraphFixture fx;
    Signature sig = make_signature({{"adj", 2}});
    FinStructure g(sig, static_cast<int>(pairs.size()));
    const int adj = sig.index_of("adj");
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            const auto& [a, b] = pairs[i];
            const auto& [c, d] = pairs[j];
            const int meet = (a == c) + (a == d) + (b == c) + (b == d);
            if (meet == 1) g.add_symmetric(adj, static_cast<int>(i), static_cast<int>(j));
        }
    g.canonicalize();
    fx.graph = std::move(g);
    for (const auto& [a, b] : pairs)
        fx.labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
    return fx;
}

int pair_index(const std::vector<std::pair<int, int>>& pairs, int a, int b) {
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i] == std::pair{a, b}) return static_cast<int>(i);
    throw std::logic_error("fixture pair not present");
}

}  // namespace

GraphFixture triangular_graph_fixture(int ground) {
    if (ground < 6) throw std::invalid_argument("triangular graph fixture needs ground >= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= ground; ++a)
        for (int b = a + 1; b <= ground; ++b) pairs.push_back({a, b});
    GraphFixture fx = intersection_graph(pairs);
    // A triangle with empty total intersection against one with a common point.
    fx.witness_first = {pair_index(pairs, 1, 2), pair_index(pairs, 2, 3),
                        pair_index(pairs, 1, 3)};
    fx.witness_second = {pair_index(pairs, 1, 2), pair_index(pairs, 1, 3),
                         pair_index(pairs, 1, 4)};
    return fx;
}

GraphFixture rook_graph_fixture(int ground) {
    if (ground < 8 || ground % 2 != 0)
        throw std::invalid_argument("rook graph fixture needs even ground >= 8");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= ground; ++a)
        for (int b = a + 1; b <= ground; ++b)
            if (a % 2 != b % 2) pairs.push_back({a, b});
    GraphFixture fx = intersection_graph(pairs);
    // Two disjoint edges along a shared odd coordinate against a mixed pair
    // where one edge runs along an even coordinate.
    fx.witness_first = {pair_index(pairs, 1, 2), pair_index(pairs, 1, 4),
                        pair_index(pairs, 3, 6), pair_index(pairs, 3, 8)};
    fx.witness_second = {pair_index(pairs, 1, 2), pair_index(pairs, 1, 4),
                         pair_index(pairs, 3, 6), pair_index(pairs, 5, 6)};
    return fx;
}

ScenarioReport graph_fixture_scenario(const GraphFixture& fx, const std::string& name, int k) {
    ScenarioReport rep;
    rep.family = name;
    auto tuple_desc = [&](const std::vector<int>& t) {
        std::string s;
        for (int x : t) {
            if (!s.empty()) s += " ";
            s += fx.labels[static_cast<size_t>(x)];
        }
        return s;
    };
    const bool types_agree =
        atp(fx.graph, fx.witness_first) == atp(fx.graph, fx.witness_second);
    const bool mapped =
        has_automorphism_mapping(fx.graph, fx.witness_first, fx.witness_second);
    rep.witnesses.push_back({"first", tuple_desc(fx.witness_first)});
    rep.witnesses.push_back({"second", tuple_desc(fx.witness_second)});
    rep.diagnostics.push_back({"types agree", types_agree ? "true" : "false"});
    rep.diagnostics.push_back({"automorphism", mapped ? "found" : "none"});
    const HomogeneityReport h = is_homogeneous_upto(fx.graph, k);
    rep.diagnostics.push_back({"checked upto", std::to_string(h.checked_upto)});
    if (types_agree && !mapped && !h.homogeneous) {
        rep.verdict = "non-homogeneous";
        if (h.witness) {
            rep.diagnostics.push_back({"witness width", std::to_string(h.witness->width)});
            rep.witnesses.push_back({"checker first", tuple_desc(h.witness->first)});
            rep.witnesses.push_back({"checker second", tuple_desc(h.witness->second)});
        }
    } else {
        rep.verdict = "UNEXPECTED";
    }
    return rep;
}

}  // namespace homoglab
