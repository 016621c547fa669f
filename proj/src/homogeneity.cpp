#include "homoglab/homogeneity.hpp"

#include <algorithm>
#include <map>

#include "homoglab/atomic_type.hpp"
#include "homoglab/embedding.hpp"

namespace homoglab {

namespace {

// Enumerates ordered tuples with pairwise distinct entries in lexicographic order.
bool next_distinct_tuple(std::vector<int>& t, int n) {
    int w = static_cast<int>(t.size());
    auto taken = [&](int pos, int v) {
        for (int i = 0; i < pos; ++i)
            if (t[static_cast<size_t>(i)] == v) return true;
        return false;
    };
    int pos = w - 1;
    while (pos >= 0) {
        int v = t[static_cast<size_t>(pos)] + 1;
        while (v < n && taken(pos, v)) ++v;
        if (v < n) {
            t[static_cast<size_t>(pos)] = v;
            for (int i = pos + 1; i < w; ++i) {
                int c = 0;
                while (taken(i, c)) ++c;
                if (c >= n) return false;
                t[static_cast<size_t>(i)] = c;
            }
            return true;
        }
        --pos;
    }
    return false;
}

bool first_distinct_tuple(std::vector<int>& t, int n) {
    int w = static_cast<int>(t.size());
    if (w > n) return false;
    for (int i = 0; i < w; ++i) t[static_cast<size_t>(i)] = i;
    return true;
}

}  // namespace

HomogeneityReport is_homogeneous_upto(const FinStructure& s, int k) {
    HomogeneityReport report;
    report.checked_upto = k;
    for (int w = 1; w <= k && w <= s.size(); ++w) {
        std::map<AtomicType, std::vector<int>> rep_of_type;
        std::vector<int> t(static_cast<size_t>(w));
        if (!first_distinct_tuple(t, s.size())) break;
        do {
            AtomicType ty = atp(s, t);
            auto it = rep_of_type.find(ty);
            if (it == rep_of_type.end()) {
                rep_of_type.emplace(std::move(ty), t);
                continue;
            }
            // Orbit transitivity through the representative: rep -> t suffices.
            if (!has_automorphism_mapping(s, it->second, t)) {
                report.homogeneous = false;
                report.witness = HomogeneityWitness{w, it->second, t};
                return report;
            }
        } while (next_distinct_tuple(t, s.size()));
    }
    return report;
}

std::vector<AmalgamationFailure> amalgamation_check(const std::vector<FinStructure>& instances,
                                                    int k) {
    std::vector<AmalgamationFailure> failures;
    int n = static_cast<int>(instances.size());
    for (int i1 = 0; i1 < n; ++i1) {
        const FinStructure& b1 = instances[static_cast<size_t>(i1)];
        if (b1.size() > k) continue;
        for (int i2 = i1; i2 < n; ++i2) {
            const FinStructure& b2 = instances[static_cast<size_t>(i2)];
            if (b2.size() > k) continue;
            if (b1.signature() != b2.signature()) continue;
            // Overlaps: a subset of B1 together with an embedding of its induced
            // substructure into B2.
            int m = b1.size();
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<int> subset;
                for (int v = 0; v < m; ++v)
                    if (mask & (1 << v)) subset.push_back(v);
                FinStructure a = b1.induced(subset);
                for (const auto& emb : find_embeddings(a, b2)) {
                    bool completed = false;
                    for (const FinStructure& c : instances) {
                        if (c.signature() != b1.signature()) continue;
                        for (const auto& g1 : find_embeddings(b1, c)) {
                            std::vector<int> pins(static_cast<size_t>(b2.size()), -1);
                            bool clash = false;
                            for (size_t j = 0; j < subset.size(); ++j) {
                                int target = g1[static_cast<size_t>(subset[j])];
                                int& slot = pins[static_cast<size_t>(emb[j])];
                                if (slot >= 0 && slot != target) clash = true;
                                slot = target;
                            }
                            if (clash) continue;
                            if (!find_embeddings_pinned(b2, c, pins, 1).empty()) {
                                completed = true;
                                break;
                            }
                        }
                        if (completed) break;
                    }
                    if (!completed) {
                        std::vector<int> in_b2;
                        for (size_t j = 0; j < subset.size(); ++j)
                            in_b2.push_back(emb[j]);
                        failures.push_back({i1, i2, subset, in_b2});
                    }
                }
            }
        }
    }
    return failures;
}

}  // namespace homoglab
