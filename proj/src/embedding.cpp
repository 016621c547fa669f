#include "homoglab/embedding.hpp"

#include <algorithm>

namespace homoglab {

namespace {

struct Search {
    const FinStructure& a;
    const FinStructure& b;
    std::size_t limit;
    std::vector<int> image;
    std::vector<char> used;
    std::vector<std::vector<int>> hits;

    bool consistent(int v, int c) const {
        const Signature& sig = a.signature();
        for (int r = 0; r < sig.count(); ++r) {
            if (sig.arity(r) == 1) {
                if (a.holds(r, v) != b.holds(r, c)) return false;
            } else {
                if (a.holds(r, v, v) != b.holds(r, c, c)) return false;
                for (int u = 0; u < v; ++u) {
                    if (image[static_cast<size_t>(u)] < 0) continue;
                    int d = image[static_cast<size_t>(u)];
                    if (a.holds(r, v, u) != b.holds(r, c, d)) return false;
                    if (a.holds(r, u, v) != b.holds(r, d, c)) return false;
                }
            }
        }
        return true;
    }

    bool run(int v) {
        if (v == a.size()) {
            hits.push_back(image);
            return limit != 0 && hits.size() >= limit;
        }
        if (image[static_cast<size_t>(v)] >= 0) {
            // pinned ahead of time; must agree with everything assigned below v
            if (!consistent(v, image[static_cast<size_t>(v)])) return false;
            return run(v + 1);
        }
        for (int c = 0; c < b.size(); ++c) {
            if (used[static_cast<size_t>(c)]) continue;
            if (!consistent(v, c)) continue;
            image[static_cast<size_t>(v)] = c;
            used[static_cast<size_t>(c)] = 1;
            if (run(v + 1)) return true;
            image[static_cast<size_t>(v)] = -1;
            used[static_cast<size_t>(c)] = 0;
        }
        return false;
    }
};

}  // namespace

std::vector<std::vector<int>> find_embeddings_pinned(const FinStructure& a,
                                                     const FinStructure& b,
                                                     const std::vector<int>& pins,
                                                     std::size_t limit) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("embedding search needs a common signature");
    Search s{a, b, limit, pins, std::vector<char>(static_cast<size_t>(b.size()), 0), {}};
    s.image.resize(static_cast<size_t>(a.size()), -1);
    // Validate the pins: injective and consistent among themselves.
    for (int v = 0; v < a.size(); ++v) {
        int c = s.image[static_cast<size_t>(v)];
        if (c < 0) continue;
        if (c >= b.size()) throw std::out_of_range("pin image out of range");
        if (s.used[static_cast<size_t>(c)]) return {};
        s.used[static_cast<size_t>(c)] = 1;
    }
    for (int v = 0; v < a.size(); ++v) {
        int c = s.image[static_cast<size_t>(v)];
        if (c < 0) continue;
        s.image[static_cast<size_t>(v)] = -1;
        s.used[static_cast<size_t>(c)] = 0;
        bool ok = s.consistent(v, c);
        s.image[static_cast<size_t>(v)] = c;
        s.used[static_cast<size_t>(c)] = 1;
        if (!ok) return {};
    }
    s.run(0);
    return s.hits;
}

std::vector<std::vector<int>> find_embeddings(const FinStructure& a, const FinStructure& b,
                                              std::size_t limit) {
    std::vector<int> pins(static_cast<size_t>(a.size()), -1);
    return find_embeddings_pinned(a, b, pins, limit);
}

bool has_automorphism_mapping(const FinStructure& s, const std::vector<int>& from,
                              const std::vector<int>& to) {
    if (from.size() != to.size()) return false;
    std::vector<int> pins(static_cast<size_t>(s.size()), -1);
    for (size_t i = 0; i < from.size(); ++i) {
        int v = from[i], c = to[i];
        if (pins[static_cast<size_t>(v)] >= 0 && pins[static_cast<size_t>(v)] != c) return false;
        pins[static_cast<size_t>(v)] = c;
    }
    return !find_embeddings_pinned(s, s, pins, 1).empty();
}

}  // namespace homoglab
