#pragma once
// One entry point that builds a saturated fragment of any family and renders
// it as a plain structure.

#include "homoglab/distance_monoid.hpp"
#include "homoglab/indep.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

struct FamilyHandle {
    Family family = Family::urysohn;
    DistanceMonoid monoid;  // urysohn only
};

// Deterministic greedy saturation to level k with witness multiplicity mult.
// The size parameter n is family-specific: point count for urysohn, base feet
// for bipede, plain points for omegapede, total-size cap for crosscut.
// Throws std::runtime_error with the first unsatisfiable demand when n cannot
// accommodate the requested level.
FinStructure generic_extend(const FamilyHandle& h, int n, int k, int mult = 3);

// The same construction kept as a workbench for queries.
Workbench generic_workbench(const FamilyHandle& h, int n, int k, int mult = 3);

}  // namespace homoglab
