#pragma once
// Omega-pede fragments: plain points, F-points split into classes of two
// cells, and legs from plain points into one chosen cell per class.

#include <string>
#include <vector>

#include "homoglab/report.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

// Points are append-only; a plain point carries its leg pattern (chosen cell
// per class) and appending a class extends every pattern.
struct OmegapedeFragment {
    struct Point {
        bool f = false;
        int cls = -1, cell = -1;       // F-points only
        std::vector<int> pattern;      // plain points only, one cell id per class
    };

    int base_points = 0;  // leading plain points demands range over
    int cell_size = 0;
    int n_classes = 0;
    std::vector<Point> points;
    int sat_k = 0, sat_m = 0;

    int size() const { return static_cast<int>(points.size()); }
    bool is_f(int x) const { return points[static_cast<size_t>(x)].f; }
    int class_of(int x) const { return points[static_cast<size_t>(x)].cls; }
    int cell_of(int x) const { return points[static_cast<size_t>(x)].cell; }
    int leg_cell(int x, int cls) const {
        return points[static_cast<size_t>(x)].pattern[static_cast<size_t>(cls)];
    }

    bool e0(int x, int y) const;  // same class (or both plain, or x == y)
    bool e1(int x, int y) const;  // same cell within a class
    bool l_edge(int x, int y) const;  // plain x has a leg to F-point y

    int add_plain(const std::vector<int>& pattern);
    int add_f(int cls, int cell);
    int add_class();  // extends every plain pattern with cell 0

    std::vector<int> f_members(int cls, int cell) const;
};

// n_points plain points with hash-chosen patterns over n_classes classes of
// 2*cell_size F-points each, then extra classes until every leg pattern over
// every <=k-subset of the plain base has >= m witness classes.
OmegapedeFragment build_omegapede(int n_classes, int cell_size, int n_points, int k, int m);

// Rendering with F (unary), E0, E1 (binary, on F-points), L (plain -> F).
FinStructure omegapede_to_structure(const OmegapedeFragment& o);

// Dividing of tp(abar / bbar cbar) over cbar: some a outside cbar is (i)
// equal to some b, or (ii) an F-point class-linked to some b but to no c.
bool divides_omegapede(const OmegapedeFragment& o, const std::vector<int>& abar,
                       const std::vector<int>& bbar, const std::vector<int>& cbar);

// Legs L(a,c), L(b,d) into distinct cells of one class: the premise gate over
// that class passes yet the merged extension problem forces a point with legs
// into both cells.
ScenarioReport omegapede_counterexample();

}  // namespace homoglab
