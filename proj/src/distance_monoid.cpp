#include "homoglab/distance_monoid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace homoglab {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<MonoidViolation> check_monoid(const DistanceMonoid& m) {
    std::vector<MonoidViolation> out;
    int n = m.size();
    if (n == 0) {
        out.push_back({"shape", {-1, -1, -1}, "empty element list"});
        return out;
    }
    if (static_cast<int>(m.plus.size()) != n) {
        out.push_back({"shape", {-1, -1, -1}, "operation table has wrong row count"});
        return out;
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m.plus[static_cast<size_t>(i)].size()) != n) {
            out.push_back({"shape", {i, -1, -1}, "operation table row has wrong length"});
            return out;
        }
        for (int j = 0; j < n; ++j) {
            int v = m.add(i, j);
            if (v < 0 || v >= n) {
                out.push_back({"shape", {i, j, -1}, "table entry out of range"});
                return out;
            }
        }
    }
    for (int j = 0; j < n; ++j)
        if (m.add(0, j) != j) {
            out.push_back({"identity", {0, j, -1},
                           m.labels[0] + "+" + m.labels[static_cast<size_t>(j)] + " != " +
                               m.labels[static_cast<size_t>(j)]});
            break;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.add(i, j) != m.add(j, i))
                out.push_back({"commutativity", {i, j, -1},
                               m.labels[static_cast<size_t>(i)] + "+" +
                                   m.labels[static_cast<size_t>(j)] + " != " +
                                   m.labels[static_cast<size_t>(j)] + "+" +
                                   m.labels[static_cast<size_t>(i)]});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (m.add(m.add(i, j), k) != m.add(i, m.add(j, k)))
                    out.push_back({"associativity", {i, j, k},
                                   "(" + m.labels[static_cast<size_t>(i)] + "+" +
                                       m.labels[static_cast<size_t>(j)] + ")+" +
                                       m.labels[static_cast<size_t>(k)] + " != " +
                                       m.labels[static_cast<size_t>(i)] + "+(" +
                                       m.labels[static_cast<size_t>(j)] + "+" +
                                       m.labels[static_cast<size_t>(k)] + ")"});
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (m.add(i, k) > m.add(j, k))
                    out.push_back({"monotonicity", {i, j, k},
                                   m.labels[static_cast<size_t>(i)] + "+" +
                                       m.labels[static_cast<size_t>(k)] + " > " +
                                       m.labels[static_cast<size_t>(j)] + "+" +
                                       m.labels[static_cast<size_t>(k)]});
    return out;
}

TruncatedResult truncated_monoid(const std::vector<double>& values) {
    TruncatedResult res;
    std::vector<double> v = values;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty() || std::abs(v.front()) > 1e-12)
        throw std::invalid_argument("value set must contain 0");
    if (v.front() < -1e-12) throw std::invalid_argument("values must be non-negative");
    int n = static_cast<int>(v.size());
    DistanceMonoid m;
    for (double x : v) m.labels.push_back(format_value(x));
    m.plus.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double target = v[static_cast<size_t>(i)] + v[static_cast<size_t>(j)];
            int best = 0;
            for (int x = 0; x < n; ++x)
                if (v[static_cast<size_t>(x)] <= target + 1e-9) best = x;
            m.plus[static_cast<size_t>(i)][static_cast<size_t>(j)] = best;
        }
    auto violations = check_monoid(m);
    res.monoid = std::move(m);
    if (violations.empty()) {
        res.ok = true;
    } else {
        res.ok = false;
        res.rejection = violations.front();
    }
    return res;
}

SimplicityReport is_simple(const DistanceMonoid& m) {
    for (int r = 1; r < m.size(); ++r)
        for (int s = r; s < m.size(); ++s)
            if (m.add(m.add(r, r), s) != m.add(r, s)) return {false, {r, s}};
    return {true, {-1, -1}};
}

std::vector<int> idempotents(const DistanceMonoid& m) {
    std::vector<int> out;
    for (int r = 0; r < m.size(); ++r)
        if (m.add(r, r) == r) out.push_back(r);
    return out;
}

int su_rank(const DistanceMonoid& m) {
    int rank = 0;
    for (int r : idempotents(m))
        if (r != m.rmax()) ++rank;
    return rank;
}

std::vector<int> coordinatization_chain(const DistanceMonoid& m) {
    std::vector<int> out;
    for (int r : idempotents(m))
        if (r != 0 && r != m.rmax()) out.push_back(r);
    out.push_back(0);
    std::sort(out.rbegin(), out.rend());
    // A one-element monoid has no non-maximal idempotent at all, not even 0.
    if (m.size() == 1) out.clear();
    return out;
}

std::vector<EquivRelDescriptor> definable_equivalences(const DistanceMonoid& m) {
    // Atomic 2-types are extracted from two-point template spaces rendered the same
    // way space_to_structure renders: one binary relation per element, "d(x,y) <= r".
    std::vector<RelationSymbol> symbols;
    for (const std::string& lab : m.labels) symbols.push_back({"d_" + lab, 2});
    Signature sig = make_signature(std::move(symbols));
    std::vector<AtomicType> type_at_distance(static_cast<size_t>(m.size()));
    for (int v = 1; v < m.size(); ++v) {
        FinStructure two(sig, 2);
        for (int r = 0; r < m.size(); ++r) {
            int rel = sig.index_of("d_" + m.labels[static_cast<size_t>(r)]);
            two.add(rel, 0, 0);
            two.add(rel, 1, 1);
            if (v <= r) two.add_symmetric(rel, 0, 1);
        }
        type_at_distance[static_cast<size_t>(v)] = atp(two, {0, 1});
    }
    std::vector<EquivRelDescriptor> out;
    std::vector<int> idem = idempotents(m);
    for (auto it = idem.rbegin(); it != idem.rend(); ++it) {
        EquivRelDescriptor d;
        d.name = "d_" + m.labels[static_cast<size_t>(*it)];
        for (int v = 1; v <= *it; ++v) d.accepted.push_back(type_at_distance[static_cast<size_t>(v)]);
        std::sort(d.accepted.begin(), d.accepted.end());
        out.push_back(std::move(d));
    }
    return out;
}

DistanceMonoid monoid_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DistanceMonoid m;
    m.labels = j.at("elements").get<std::vector<std::string>>();
    m.plus = j.at("plus").get<std::vector<std::vector<int>>>();
    return m;
}

std::string monoid_to_json(const DistanceMonoid& m) {
    nlohmann::ordered_json j;
    j["elements"] = m.labels;
    j["plus"] = m.plus;
    return j.dump(2) + "\n";
}

DistanceMonoid load_monoid(const std::string& path) {
    return monoid_from_json(read_text_file(path));
}

void save_monoid(const DistanceMonoid& m, const std::string& path) {
    write_text_file(path, monoid_to_json(m));
}

}  // namespace homoglab
