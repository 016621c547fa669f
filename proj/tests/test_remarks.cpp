#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "homoglab/atomic_type.hpp"
#include "homoglab/embedding.hpp"
#include "homoglab/homogeneity.hpp"
#include "homoglab/remarks.hpp"
#include "homoglab/structure.hpp"

using namespace homoglab;

namespace {

FinStructure complete(int n) {
    FinStructure g(make_signature({{"adj", 2}}), n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_symmetric(0, i, j);
    g.canonicalize();
    return g;
}

long count_ordered_triangles(const FinStructure& g) {
    long hits = 0;
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            for (int c = 0; c < g.size(); ++c) {
                if (a == b || a == c || b == c) continue;
                if (g.holds(0, a, b) && g.holds(0, a, c) && g.holds(0, b, c)) ++hits;
            }
    return hits;
}

}  // namespace

TEST_CASE("pair intersection graph on six points") {
    const GraphFixture fx = triangular_graph_fixture(6);
    REQUIRE(fx.graph.size() == 15);  // all 2-subsets of {1..6}
    CHECK(fx.labels.size() == 15);
    CHECK(fx.labels[0] == "{1,2}");
    // Degree: a pair meets 2*(6-2) others.
    for (int v = 0; v < fx.graph.size(); ++v) {
        int deg = 0;
        for (int w = 0; w < fx.graph.size(); ++w)
            if (w != v && fx.graph.holds(0, v, w)) ++deg;
        CHECK(deg == 8);
    }
    // Triangles: count via the embedding search and via the exhaustive scan.
    const long ordered = count_ordered_triangles(fx.graph);
    CHECK(static_cast<long>(find_embeddings(complete(3), fx.graph).size()) == ordered);
    // 20 triads plus 60 stars, each in 6 orders.
    CHECK(ordered == 480);
}

TEST_CASE("the two triangle kinds share a type but not an orbit") {
    const GraphFixture fx = triangular_graph_fixture(6);
    REQUIRE(fx.witness_first.size() == 3);
    REQUIRE(fx.witness_second.size() == 3);
    CHECK(atp(fx.graph, fx.witness_first) == atp(fx.graph, fx.witness_second));
    CHECK_FALSE(has_automorphism_mapping(fx.graph, fx.witness_first, fx.witness_second));
    CHECK(is_homogeneous_upto(fx.graph, 2).homogeneous);
    const HomogeneityReport rep = is_homogeneous_upto(fx.graph, 3);
    REQUIRE_FALSE(rep.homogeneous);
    CHECK(rep.witness->width == 3);
}

TEST_CASE("parity rook graph on eight points") {
    const GraphFixture fx = rook_graph_fixture(8);
    REQUIRE(fx.graph.size() == 16);  // mixed-parity pairs
    for (int v = 0; v < fx.graph.size(); ++v) {
        int deg = 0;
        for (int w = 0; w < fx.graph.size(); ++w)
            if (w != v && fx.graph.holds(0, v, w)) ++deg;
        CHECK(deg == 6);  // 3 along each coordinate
    }
    REQUIRE(fx.witness_first.size() == 4);
    CHECK(atp(fx.graph, fx.witness_first) == atp(fx.graph, fx.witness_second));
    CHECK_FALSE(has_automorphism_mapping(fx.graph, fx.witness_first, fx.witness_second));
    CHECK(is_homogeneous_upto(fx.graph, 3).homogeneous);
    CHECK_FALSE(is_homogeneous_upto(fx.graph, 4).homogeneous);
}

TEST_CASE("fixture scenarios report the failure and its evidence") {
    const ScenarioReport r41 = graph_fixture_scenario(triangular_graph_fixture(6), "remark41", 3);
    CHECK(r41.verdict == "non-homogeneous");
    CHECK(r41.family == "remark41");
    bool types_agree = false, no_auto = false;
    for (const auto& [k, v] : r41.diagnostics) {
        if (k == "types agree") types_agree = v == "true";
        if (k == "automorphism") no_auto = v == "none";
    }
    CHECK(types_agree);
    CHECK(no_auto);

    const ScenarioReport r46 = graph_fixture_scenario(rook_graph_fixture(8), "remark46", 4);
    CHECK(r46.verdict == "non-homogeneous");
}

TEST_CASE("fixtures reject undersized ground sets") {
    CHECK_THROWS_AS(triangular_graph_fixture(5), std::invalid_argument);
    CHECK_THROWS_AS(rook_graph_fixture(7), std::invalid_argument);
    CHECK_THROWS_AS(rook_graph_fixture(6), std::invalid_argument);
}

TEST_CASE("larger ground sets keep the same shape") {
    const GraphFixture fx = triangular_graph_fixture(7);
    CHECK(fx.graph.size() == 21);
    const ScenarioReport rep = graph_fixture_scenario(fx, "remark41", 3);
    CHECK(rep.verdict == "non-homogeneous");
}
