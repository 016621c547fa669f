#pragma once
// Finite totally ordered commutative distance monoids and their invariants.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homoglab/equivalence.hpp"

namespace homoglab {

// Elements are indices 0..size-1 in increasing order; index 0 is the identity "0".
struct DistanceMonoid {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> plus;

    int size() const { return static_cast<int>(labels.size()); }
    int rmax() const { return size() - 1; }
    int add(int a, int b) const { return plus[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int twice(int a) const { return add(a, a); }
};

struct MonoidViolation {
    std::string axiom;  // "shape", "identity", "commutativity", "associativity", "monotonicity"
    std::array<int, 3> witness{-1, -1, -1};
    std::string detail;
};

std::vector<MonoidViolation> check_monoid(const DistanceMonoid& m);

struct TruncatedResult {
    bool ok = false;
    DistanceMonoid monoid;
    std::optional<MonoidViolation> rejection;  // the failed axiom when !ok
};

// r (+) s = max { x in R : x <= r+s } over a finite value set containing 0.
// Accepted only when the truncated table is a valid distance monoid.
TruncatedResult truncated_monoid(const std::vector<double>& values);

struct SimplicityReport {
    bool simple = true;
    std::array<int, 2> witness{-1, -1};  // r <= s with r+r+s != r+s
};

SimplicityReport is_simple(const DistanceMonoid& m);

std::vector<int> idempotents(const DistanceMonoid& m);  // ascending, includes 0
int su_rank(const DistanceMonoid& m);                   // non-maximal idempotent count

// Descriptors "d_<label>(x,y) iff d(x,y) <= label", one per idempotent, coarsest
// first, over the signature used by space_to_structure.
std::vector<EquivRelDescriptor> definable_equivalences(const DistanceMonoid& m);

// Non-maximal idempotents in decreasing order, ending at 0: the coordinatizing chain.
std::vector<int> coordinatization_chain(const DistanceMonoid& m);

DistanceMonoid monoid_from_json(const std::string& text);
std::string monoid_to_json(const DistanceMonoid& m);
DistanceMonoid load_monoid(const std::string& path);
void save_monoid(const DistanceMonoid& m, const std::string& path);

std::string format_value(double v);

}  // namespace homoglab
