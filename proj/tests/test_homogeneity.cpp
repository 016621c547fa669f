#include <vector>

#include "doctest.h"
#include "homoglab/atomic_type.hpp"
#include "homoglab/homogeneity.hpp"
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

FinStructure cycle(int n) {
    FinStructure g(make_signature({{"adj", 2}}), n);
    for (int i = 0; i < n; ++i) g.add_symmetric(0, i, (i + 1) % n);
    g.canonicalize();
    return g;
}

FinStructure path(int n) {
    FinStructure g(make_signature({{"adj", 2}}), n);
    for (int i = 0; i + 1 < n; ++i) g.add_symmetric(0, i, i + 1);
    g.canonicalize();
    return g;
}

FinStructure empty_graph(int n) {
    FinStructure g(make_signature({{"adj", 2}}), n);
    g.canonicalize();
    return g;
}

}  // namespace

TEST_CASE("the 5-cycle extends every small partial isomorphism") {
    const HomogeneityReport rep = is_homogeneous_upto(cycle(5), 4);
    CHECK(rep.homogeneous);
    CHECK(rep.checked_upto == 4);
    CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("a path fails homogeneity already at single vertices") {
    const HomogeneityReport rep = is_homogeneous_upto(path(4), 2);
    REQUIRE_FALSE(rep.homogeneous);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->width == 1);
    // The reported tuples really do have equal atomic types.
    const FinStructure g = path(4);
    CHECK(atp(g, rep.witness->first) == atp(g, rep.witness->second));
    CHECK(rep.witness->first != rep.witness->second);
}

TEST_CASE("the 6-cycle separates an edge-distance pair at width 2") {
    // In C6 both (0,2) and (0,3) are non-edges with equal atomic type, but
    // their graph distances differ, so no automorphism exchanges them.
    const HomogeneityReport rep = is_homogeneous_upto(cycle(6), 2);
    REQUIRE_FALSE(rep.homogeneous);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->width == 2);
}

TEST_CASE("complete graphs are homogeneous at any checked width") {
    CHECK(is_homogeneous_upto(complete(5), 3).homogeneous);
    CHECK(is_homogeneous_upto(empty_graph(5), 3).homogeneous);
}

TEST_CASE("amalgamation over an instance list") {
    std::vector<FinStructure> small;
    small.push_back(empty_graph(1));
    small.push_back(complete(2));
    small.push_back(empty_graph(2));

    SUBCASE("missing three-element completions are reported") {
        const auto failures = amalgamation_check(small, 2);
        CHECK_FALSE(failures.empty());
        for (const auto& f : failures) {
            CHECK(f.b1 >= 0);
            CHECK(f.b2 >= 0);
            CHECK(f.overlap_in_b1.size() == f.overlap_in_b2.size());
        }
    }

    SUBCASE("adding all three-vertex graphs closes the gaps") {
        std::vector<FinStructure> closed = small;
        closed.push_back(empty_graph(3));
        closed.push_back(path(3));
        closed.push_back(complete(3));
        FinStructure one_edge(make_signature({{"adj", 2}}), 3);
        one_edge.add_symmetric(0, 0, 1);
        one_edge.canonicalize();
        closed.push_back(one_edge);
        CHECK(amalgamation_check(closed, 2).empty());
    }
}
