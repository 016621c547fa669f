#pragma once
// Bipede fragments: feet, two-footed bodies, one blue and one red leg each.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "homoglab/report.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

// Bodies live in an append-only list so indices survive later extension points.
// Built fragments list every foot pair in lexicographic order.
struct BipedeFragment {
    int base_feet = 0;  // demands range over subsets of these
    int feet = 0;
    std::vector<std::array<int, 3>> bodies;  // {foot i, foot j, blue foot}, i < j
    int sat_k = 0, sat_m = 0;

    int body_count() const { return static_cast<int>(bodies.size()); }
    int body_at(int i, int j) const;  // -1 when that pair is not represented
    std::pair<int, int> body_feet(int t) const {
        return {bodies[static_cast<size_t>(t)][0], bodies[static_cast<size_t>(t)][1]};
    }
    int blue_foot(int t) const { return bodies[static_cast<size_t>(t)][2]; }
    int red_foot(int t) const;
    bool body_has_foot(int t, int f) const;
    bool blue_at(int t, int f) const { return blue_foot(t) == f; }
    // -1 when disjoint; otherwise the single shared foot of two distinct bodies.
    int shared_foot(int t1, int t2) const;
    std::string body_name(int t) const;

    int add_foot() { return feet++; }
    int add_body(int i, int j, int blue);

    // Element ids in the full rendering: feet first, then bodies.
    int body_id(int t) const { return feet + t; }
    bool id_is_body(int id) const { return id >= feet; }
};

// Grows feet until every coloring pattern over every <=k-subset of the first
// n_feet feet has >= m witness feet. Always succeeds.
BipedeFragment build_bipede(int n_feet, int k, int m);

// Full two-sorted rendering: F (feet), L/B/R from bodies to feet.
FinStructure bipede_to_structure(const BipedeFragment& b);

// The body reduct: one binary relation per sharing pattern (s_bb, s_br, s_rb,
// s_rr, disj), which is where the definable equivalence relations live.
FinStructure bipede_reduct(const BipedeFragment& b);

// cl = cl'' (bodies over foot pairs) after cl' (feet of bodies); ids as in
// bipede_to_structure. Input may mix feet and bodies; output is sorted.
std::vector<int> bipede_cl(const BipedeFragment& b, const std::vector<int>& elems);

// Dividing of tp(abar / bbar cbar) over cbar, all tuples of body indices:
// (a) some a lies in cl(bbar u cbar) \ cl(cbar), or (b) some a shares a foot
// with some b while sharing none with any c.
bool divides_bipede(const BipedeFragment& b, const std::vector<int>& abar,
                    const std::vector<int>& bbar, const std::vector<int>& cbar);

// Five feet i,j,k,l,m and bodies a={i,j}, b={k,l}, c={j,l}, d={l,m} colored
// B(a,j), R(c,j), B(b,l), R(d,l); the premise gate over the blue class of c
// passes for (c,d) and (b,d) but not (a,c), and the merged extension problem
// is contradictory.
ScenarioReport bipede_counterexample();

}  // namespace homoglab
