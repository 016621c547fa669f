#pragma once
// Zero-definable equivalence relations on a finite structure, found as unions of
// atomic 2-types (plus the diagonal) that happen to be transitive.

#include <string>
#include <vector>

#include "homoglab/atomic_type.hpp"
#include "homoglab/structure.hpp"

namespace homoglab {

struct EquivRelDescriptor {
    std::string name;
    std::vector<AtomicType> accepted;  // parameter-free 2-types, sorted

    bool eval(const FinStructure& s, int x, int y) const;
};

// Class labels (smallest member id per class) under a descriptor; also usable to
// compare two descriptors extensionally.
std::vector<int> relation_classes(const FinStructure& s, const EquivRelDescriptor& d);

// Nontrivial (>=2 classes, some class >=2) equivalence relations on this fragment,
// deduplicated extensionally, in a deterministic order. Relations are named E1, E2, ...
std::vector<EquivRelDescriptor> discover_equiv_relations(const FinStructure& s);

// The common refinement of two discovered relations, when it is again an
// equivalence relation with the accepted-type representation.
EquivRelDescriptor intersect_descriptors(const EquivRelDescriptor& a,
                                         const EquivRelDescriptor& b, std::string name);

}  // namespace homoglab
