#pragma once
// Two classical non-homogeneous graphs used as expected-failure fixtures for
// the homogeneity checker.

#include <string>
#include <vector>

#include "homoglab/report.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

struct GraphFixture {
    FinStructure graph;
    std::vector<std::string> labels;  // element names like "{1,2}"
    // Designated tuples with equal atomic types but no automorphism between
    // them; the checker must fail at |witness| even when told k = |witness|.
    std::vector<int> witness_first, witness_second;
};

// Intersection graph of the 2-subsets of {1..ground}: vertices adjacent when
// they meet in one point. Witness triples {1,2},{2,3},{1,3} (a triangle of
// pairwise-intersecting sets with empty total intersection) versus
// {1,2},{1,3},{1,4} (common point 1). Requires ground >= 6.
GraphFixture triangular_graph_fixture(int ground);

// Same edge rule on pairs {even, odd} from {1..ground}: the rook graph on an
// evens-by-odds grid. Witness quadruples {1,2},{1,4},{3,6},{3,8} versus
// {1,2},{1,4},{3,6},{5,6}. Requires even ground >= 8.
GraphFixture rook_graph_fixture(int ground);

// Run the homogeneity check on a fixture and package the expected failure:
// applicable scenario, verdict "non-homogeneous", witness tuples, and the
// checked atomic-type agreement of the designated pair.
ScenarioReport graph_fixture_scenario(const GraphFixture& fx, const std::string& name, int k);

}  // namespace homoglab
