#pragma once
// Crosscut fragments: two crossing equivalence relations P and Q whose
// classes intersect in same-size cells.

#include <string>
#include <utility>
#include <vector>

#include "homoglab/report.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

struct CrosscutSpec {
    int np = 0, nq = 0, cell = 0;
};

// The grid part enumerates cells in row-major order; extension points appended
// later carry their own class pair (possibly fresh class ids).
struct Crosscut {
    CrosscutSpec spec;
    std::vector<std::pair<int, int>> extra;

    int grid_size() const { return spec.np * spec.nq * spec.cell; }
    int size() const { return grid_size() + static_cast<int>(extra.size()); }
    int p_class(int x) const;
    int q_class(int x) const;
    int element(int p, int q, int t) const { return (p * spec.nq + q) * spec.cell + t; }
    bool same_p(int x, int y) const { return p_class(x) == p_class(y); }
    bool same_q(int x, int y) const { return q_class(x) == q_class(y); }
    int add_point(int p, int q);  // fresh class: pass np or nq (or larger)
};

Crosscut build_crosscut(const CrosscutSpec& spec);

// Rendering with binary P and Q (reflexive pairs included).
FinStructure crosscut_to_structure(const Crosscut& c);

std::string element_desc_crosscut(const Crosscut& c, int x);

// Picks a,b,c,d in the four cells of two P-classes crossed with two
// Q-classes. Over the Q-class imaginary of c: c and d are independent, a
// depends on c and b on d (P-sharing is not pinned by the base), yet merging
// tp(a/c) with tp(b/d) is contradictory. Fewer than two classes on either
// side makes the scenario inapplicable.
ScenarioReport crosscut_counterexample(const Crosscut& c);

}  // namespace homoglab
