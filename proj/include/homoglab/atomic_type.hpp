#pragma once
// Quantifier-free atomic types of tuples with parameters.
//
// A type over width w and p parameters is the full signed literal list over slots
// 0..w+p-1 (free slots first, then parameter slots), enumerated in a fixed order:
// equalities for slot pairs s<t, then for each relation (signature order) all unary
// slots resp. all ordered slot pairs. Two types are equal iff widths, parameter
// counts and literal vectors agree; structures are expected to share a signature.

#include <cstdint>
#include <string>
#include <vector>

#include "homoglab/structure.hpp"

namespace homoglab {

struct AtomicType {
    int width = 0;
    int param_count = 0;
    std::vector<int> params;  // parameter elements as seen at creation; not compared
    std::vector<uint64_t> literals;

    friend bool operator==(const AtomicType& x, const AtomicType& y) {
        return x.width == y.width && x.param_count == y.param_count && x.literals == y.literals;
    }
    friend bool operator<(const AtomicType& x, const AtomicType& y) {
        if (x.width != y.width) return x.width < y.width;
        if (x.param_count != y.param_count) return x.param_count < y.param_count;
        return x.literals < y.literals;
    }
};

AtomicType atp(const FinStructure& s, const std::vector<int>& free_tuple,
               const std::vector<int>& params = {});

// Same literal vector with the two free slots of a width-2, parameter-free type swapped.
AtomicType transpose_pair_type(const Signature& sig, const AtomicType& t);

std::string atomic_type_to_string(const Signature& sig, const AtomicType& t);

}  // namespace homoglab
