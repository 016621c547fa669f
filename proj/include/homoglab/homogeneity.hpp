#pragma once
// Bounded homogeneity checking and amalgamation probing over instance lists.

#include <optional>
#include <vector>

#include "homoglab/structure.hpp"

namespace homoglab {

struct HomogeneityWitness {
    int width = 0;
    std::vector<int> first;   // two tuples with equal atomic type ...
    std::vector<int> second;  // ... but no automorphism carrying one to the other
};

struct HomogeneityReport {
    bool homogeneous = true;
    int checked_upto = 0;
    std::optional<HomogeneityWitness> witness;
};

// True iff every partial isomorphism between substructures of size <= k extends to
// an automorphism. On failure the witness pair has minimal width; within one width
// the scan order (lexicographic tuples) fixes the reported pair.
HomogeneityReport is_homogeneous_upto(const FinStructure& s, int k);

struct AmalgamationFailure {
    int b1 = 0, b2 = 0;               // indices into the instance list
    std::vector<int> overlap_in_b1;   // common substructure A, as elements of B1
    std::vector<int> overlap_in_b2;   // the same A embedded into B2
};

// Looks for spans B1 <- A -> B2 (|B1|,|B2| <= k) that no listed instance completes.
std::vector<AmalgamationFailure> amalgamation_check(const std::vector<FinStructure>& instances,
                                                    int k);

}  // namespace homoglab
