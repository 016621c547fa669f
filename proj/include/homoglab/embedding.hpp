#pragma once
// Strong embedding search between finite structures.

#include <cstddef>
#include <vector>

#include "homoglab/structure.hpp"

namespace homoglab {

// All strong (induced) embeddings of a into b, found by lexicographic backtracking:
// vertices of a are assigned in increasing order, candidates tried in increasing
// order, so the result list is lexicographically sorted. Stops after `limit` hits
// (0 = unbounded).
std::vector<std::vector<int>> find_embeddings(const FinStructure& a, const FinStructure& b,
                                              std::size_t limit = 0);

// Same search with some vertices pre-assigned (pins[i] = image of i, or -1).
std::vector<std::vector<int>> find_embeddings_pinned(const FinStructure& a,
                                                     const FinStructure& b,
                                                     const std::vector<int>& pins,
                                                     std::size_t limit = 0);

bool has_automorphism_mapping(const FinStructure& s, const std::vector<int>& from,
                              const std::vector<int>& to);

}  // namespace homoglab
