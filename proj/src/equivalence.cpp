#include "homoglab/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homoglab {

bool EquivRelDescriptor::eval(const FinStructure& s, int x, int y) const {
    if (x == y) return true;
    AtomicType t = atp(s, {x, y});
    return std::binary_search(accepted.begin(), accepted.end(), t);
}

std::vector<int> relation_classes(const FinStructure& s, const EquivRelDescriptor& d) {
    std::vector<int> label(static_cast<size_t>(s.size()));
    for (int x = 0; x < s.size(); ++x) {
        label[static_cast<size_t>(x)] = x;
        for (int y = 0; y < x; ++y)
            if (d.eval(s, y, x)) {
                label[static_cast<size_t>(x)] = label[static_cast<size_t>(y)];
                break;
            }
    }
    return label;
}

namespace {

struct PairTypes {
    std::vector<AtomicType> types;        // distinct 2-types, sorted
    std::vector<std::vector<int>> type_of;  // type index per ordered pair, -1 on diagonal
    std::vector<std::vector<int>> orbits;   // transpose orbits as lists of type indices
};

PairTypes collect_pair_types(const FinStructure& s) {
    PairTypes out;
    std::map<AtomicType, int> index;
    out.type_of.assign(static_cast<size_t>(s.size()),
                       std::vector<int>(static_cast<size_t>(s.size()), -1));
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            if (x == y) continue;
            AtomicType t = atp(s, {x, y});
            auto [it, fresh] = index.emplace(std::move(t), static_cast<int>(index.size()));
            out.type_of[static_cast<size_t>(x)][static_cast<size_t>(y)] = it->second;
        }
    out.types.resize(index.size());
    for (const auto& [t, i] : index) out.types[static_cast<size_t>(i)] = t;
    // Transpose orbits; the transpose of a realized 2-type is realized by the
    // reversed pair, so look it up through any realizing pair.
    std::vector<int> transpose(index.size(), -1);
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            if (x == y) continue;
            int t = out.type_of[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (transpose[static_cast<size_t>(t)] < 0)
                transpose[static_cast<size_t>(t)] =
                    out.type_of[static_cast<size_t>(y)][static_cast<size_t>(x)];
        }
    std::vector<char> seen(index.size(), 0);
    for (size_t t = 0; t < index.size(); ++t) {
        if (seen[t]) continue;
        std::vector<int> orbit{static_cast<int>(t)};
        seen[t] = 1;
        int u = transpose[t];
        if (u >= 0 && !seen[static_cast<size_t>(u)]) {
            orbit.push_back(u);
            seen[static_cast<size_t>(u)] = 1;
        }
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

bool is_transitive(const std::vector<std::vector<char>>& rel) {
    int n = static_cast<int>(rel.size());
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (!rel[static_cast<size_t>(x)][static_cast<size_t>(z)]) continue;
            for (int w = 0; w < n; ++w)
                if (rel[static_cast<size_t>(z)][static_cast<size_t>(w)] &&
                    !rel[static_cast<size_t>(x)][static_cast<size_t>(w)])
                    return false;
        }
    return true;
}

}  // namespace

std::vector<EquivRelDescriptor> discover_equiv_relations(const FinStructure& s) {
    std::vector<EquivRelDescriptor> found;
    if (s.size() == 0) return found;
    PairTypes pt = collect_pair_types(s);
    size_t norbits = pt.orbits.size();
    if (norbits == 0) return found;
    if (norbits > 20) throw std::runtime_error("too many atomic 2-types to enumerate unions");
    std::set<std::vector<std::vector<char>>> seen_extensions;
    for (uint64_t mask = 1; mask < (uint64_t{1} << norbits); ++mask) {
        std::vector<char> take(pt.types.size(), 0);
        for (size_t o = 0; o < norbits; ++o)
            if (mask & (uint64_t{1} << o))
                for (int t : pt.orbits[o]) take[static_cast<size_t>(t)] = 1;
        std::vector<std::vector<char>> rel(static_cast<size_t>(s.size()),
                                           std::vector<char>(static_cast<size_t>(s.size()), 0));
        for (int x = 0; x < s.size(); ++x) {
            rel[static_cast<size_t>(x)][static_cast<size_t>(x)] = 1;
            for (int y = 0; y < s.size(); ++y) {
                if (x == y) continue;
                int t = pt.type_of[static_cast<size_t>(x)][static_cast<size_t>(y)];
                if (take[static_cast<size_t>(t)])
                    rel[static_cast<size_t>(x)][static_cast<size_t>(y)] = 1;
            }
        }
        // symmetric by transpose-orbit closure; needs transitivity + nontriviality
        if (!is_transitive(rel)) continue;
        int classes = 0;
        bool big_class = false;
        std::vector<char> counted(static_cast<size_t>(s.size()), 0);
        for (int x = 0; x < s.size(); ++x) {
            if (counted[static_cast<size_t>(x)]) continue;
            ++classes;
            int sz = 0;
            for (int y = 0; y < s.size(); ++y)
                if (rel[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
                    counted[static_cast<size_t>(y)] = 1;
                    ++sz;
                }
            if (sz >= 2) big_class = true;
        }
        if (classes < 2 || !big_class) continue;
        if (!seen_extensions.insert(rel).second) continue;
        EquivRelDescriptor d;
        d.name = "E" + std::to_string(found.size() + 1);
        for (size_t t = 0; t < pt.types.size(); ++t)
            if (take[t]) d.accepted.push_back(pt.types[t]);
        std::sort(d.accepted.begin(), d.accepted.end());
        found.push_back(std::move(d));
    }
    return found;
}

EquivRelDescriptor intersect_descriptors(const EquivRelDescriptor& a,
                                         const EquivRelDescriptor& b, std::string name) {
    EquivRelDescriptor out;
    out.name = std::move(name);
    for (const AtomicType& t : a.accepted)
        if (std::binary_search(b.accepted.begin(), b.accepted.end(), t))
            out.accepted.push_back(t);
    return out;
}

}  // namespace homoglab
