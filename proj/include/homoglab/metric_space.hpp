#pragma once
// Finite metric spaces over a distance monoid: validation, completion search,
// dividing tests, and the generic saturated builder.

#include <optional>
#include <string>
#include <vector>

#include "homoglab/distance_monoid.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

struct RMetricSpace {
    DistanceMonoid monoid;
    int n = 0;
    std::vector<std::vector<int>> dist;  // element indices into the monoid

    int d(int x, int y) const { return dist[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
};

std::vector<std::string> check_space(const RMetricSpace& s);

// tp(a/b base) divides over base iff 2d(a,b) < 2d(a,c) for every c in base
// (b outside the base); with an empty base the bound is 2*r_max.
bool divides_urysohn(const RMetricSpace& s, int a, int b, const std::vector<int>& base);

// Smallest 2d(c,d) over the auxiliary tuple; r_max when the tuple is empty.
int find_independence_distance(const RMetricSpace& s, int c, const std::vector<int>& dbar);

struct CompletionResult {
    bool feasible = false;
    std::vector<std::vector<int>> completed;  // lexicographically least, when feasible
};

// Exhaustive search over the unknown (-1) entries, smallest values first.
CompletionResult metric_completion_feasible(const DistanceMonoid& m, int n,
                                            const std::vector<std::vector<int>>& partial);

// Values v for dist(x,y) consistent with all triangles through rows already fixed
// in `row` (-1 = not yet fixed). `known` is the full matrix among 0..n-1.
std::vector<int> admissible_values(const DistanceMonoid& m,
                                   const std::vector<std::vector<int>>& known,
                                   const std::vector<int>& row, int y);

// Demand-driven deterministic growth until every one-point extension pattern over
// every <=k-subset has >= m witnesses, padding to exactly n points. Throws
// std::runtime_error mentioning the first unmet demand when n is too small.
RMetricSpace build_urysohn_space(const DistanceMonoid& m, int n, int k, int mult);

FinStructure space_to_structure(const RMetricSpace& s);

RMetricSpace space_from_json(const std::string& text);
std::string space_to_json(const RMetricSpace& s);
RMetricSpace load_space(const std::string& path);
void save_space(const RMetricSpace& s, const std::string& path);

}  // namespace homoglab
