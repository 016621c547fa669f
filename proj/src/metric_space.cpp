#include "homoglab/metric_space.hpp"

#include <algorithm>

#include "json.hpp"

namespace homoglab {

std::vector<std::string> check_space(const RMetricSpace& s) {
    std::vector<std::string> out;
    if (!check_monoid(s.monoid).empty()) out.push_back("monoid axioms fail");
    if (static_cast<int>(s.dist.size()) != s.n) {
        out.push_back("distance matrix has wrong shape");
        return out;
    }
    for (int i = 0; i < s.n; ++i)
        if (static_cast<int>(s.dist[static_cast<size_t>(i)].size()) != s.n) {
            out.push_back("distance matrix has wrong shape");
            return out;
        }
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            int v = s.d(i, j);
            if (v < 0 || v >= s.monoid.size()) {
                out.push_back("distance out of range at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
                return out;
            }
        }
    for (int i = 0; i < s.n; ++i)
        if (s.d(i, i) != 0)
            out.push_back("nonzero diagonal at " + std::to_string(i));
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) {
            if (s.d(i, j) != s.d(j, i))
                out.push_back("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (s.d(i, j) == 0)
                out.push_back("zero distance between distinct points " + std::to_string(i) + "," +
                              std::to_string(j));
        }
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            for (int l = 0; l < s.n; ++l)
                if (s.d(i, l) > s.monoid.add(s.d(i, j), s.d(j, l))) {
                    out.push_back("triangle violated at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(l) + ")");
                    return out;
                }
    return out;
}

bool divides_urysohn(const RMetricSpace& s, int a, int b, const std::vector<int>& base) {
    for (int c : base)
        if (c == b) return false;
    int lhs = s.monoid.twice(s.d(a, b));
    int bound = s.monoid.twice(s.monoid.rmax());
    for (int c : base) bound = std::min(bound, s.monoid.twice(s.d(a, c)));
    return lhs < bound;
}

int find_independence_distance(const RMetricSpace& s, int c, const std::vector<int>& dbar) {
    int r = s.monoid.rmax();
    for (int d : dbar) r = std::min(r, s.monoid.twice(s.d(c, d)));
    return r;
}

std::vector<int> admissible_values(const DistanceMonoid& m,
                                   const std::vector<std::vector<int>>& known,
                                   const std::vector<int>& row, int y) {
    std::vector<int> out;
    for (int v = 1; v < m.size(); ++v) {
        bool ok = true;
        for (int u = 0; u < static_cast<int>(row.size()) && ok; ++u) {
            int w = row[static_cast<size_t>(u)];
            if (w < 0 || u == y) continue;
            int uy = known[static_cast<size_t>(u)][static_cast<size_t>(y)];
            if (v > m.add(w, uy) || w > m.add(v, uy) || uy > m.add(v, w)) ok = false;
        }
        if (ok) out.push_back(v);
    }
    return out;
}

namespace {

struct CompletionSearch {
    const DistanceMonoid& m;
    int n;
    std::vector<std::vector<int>> d;
    std::vector<std::pair<int, int>> open;

    bool consistent_at(int i, int j) const {
        for (int l = 0; l < n; ++l) {
            int il = d[static_cast<size_t>(i)][static_cast<size_t>(l)];
            int jl = d[static_cast<size_t>(j)][static_cast<size_t>(l)];
            int ij = d[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (il < 0 || jl < 0) continue;
            if (ij > m.add(il, jl) || il > m.add(ij, jl) || jl > m.add(ij, il)) return false;
        }
        return true;
    }

    bool run(size_t idx) {
        if (idx == open.size()) return true;
        auto [i, j] = open[idx];
        for (int v = 1; v < m.size(); ++v) {
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            d[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            if (consistent_at(i, j) && run(idx + 1)) return true;
        }
        d[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
        d[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
        return false;
    }
};

}  // namespace

CompletionResult metric_completion_feasible(const DistanceMonoid& m, int n,
                                            const std::vector<std::vector<int>>& partial) {
    CompletionSearch cs{m, n, partial, {}};
    for (int i = 0; i < n; ++i) cs.d[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = cs.d[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int b = cs.d[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (a < 0 && b >= 0) a = b;
            if (b < 0 && a >= 0) b = a;
            if (a != b) return {};
            cs.d[static_cast<size_t>(i)][static_cast<size_t>(j)] = a;
            cs.d[static_cast<size_t>(j)][static_cast<size_t>(i)] = a;
            if (a == 0) return {};
            if (a < 0) cs.open.push_back({i, j});
        }
    // Fixed entries must already satisfy the triangle inequality among themselves.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cs.d[static_cast<size_t>(i)][static_cast<size_t>(j)] >= 0 && !cs.consistent_at(i, j))
                return {};
    if (!cs.run(0)) return {};
    return {true, cs.d};
}

RMetricSpace build_urysohn_space(const DistanceMonoid& m, int n, int k, int mult) {
    if (n < 1) throw std::invalid_argument("need at least one point");
    RMetricSpace s;
    s.monoid = m;
    s.n = 1;
    s.dist = {{0}};

    auto subsets_upto = [&](int limit) {
        std::vector<std::vector<int>> subs;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (!cur.empty()) subs.push_back(cur);
            if (static_cast<int>(cur.size()) == limit) return;
            for (int v = start; v < s.n; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        std::stable_sort(subs.begin(), subs.end(),
                         [](const auto& x, const auto& y) { return x.size() < y.size(); });
        return subs;
    };

    auto pattern_admissible = [&](const std::vector<int>& a, const std::vector<int>& f) {
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j) {
                int duv = s.d(a[i], a[j]);
                if (duv > m.add(f[i], f[j]) || f[i] > m.add(f[j], duv) || f[j] > m.add(f[i], duv))
                    return false;
            }
        return true;
    };

    auto witness_count = [&](const std::vector<int>& a, const std::vector<int>& f) {
        int count = 0;
        for (int x = 0; x < s.n; ++x) {
            if (std::find(a.begin(), a.end(), x) != a.end()) continue;
            bool match = true;
            for (size_t i = 0; i < a.size() && match; ++i)
                if (s.d(x, a[i]) != f[i]) match = false;
            if (match) ++count;
        }
        return count;
    };

    // All demands in deterministic order: subset size, subset lex, pattern lex.
    auto all_demands = [&]() {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> demands;
        for (const auto& a : subsets_upto(k)) {
            std::vector<int> f(a.size(), 1);
            while (true) {
                if (pattern_admissible(a, f)) demands.push_back({a, f});
                size_t pos = f.size();
                while (pos > 0 && f[pos - 1] == m.rmax()) f[--pos] = 1;
                if (pos == 0) break;
                ++f[pos - 1];
            }
        }
        return demands;
    };

    // Round-robin over the demand list: resume scanning after the last served one.
    size_t cursor = 0;
    auto next_unmet = [&]() -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
        auto demands = all_demands();
        if (demands.empty()) return std::nullopt;
        for (size_t step = 0; step < demands.size(); ++step) {
            size_t i = (cursor + step) % demands.size();
            if (witness_count(demands[i].first, demands[i].second) < mult) {
                cursor = i + 1;
                return demands[i];
            }
        }
        return std::nullopt;
    };

    auto append_point = [&](const std::vector<int>& a, const std::vector<int>& f) {
        int x = s.n;
        for (auto& row : s.dist) row.push_back(-1);
        s.dist.push_back(std::vector<int>(static_cast<size_t>(s.n + 1), -1));
        s.n += 1;
        s.dist[static_cast<size_t>(x)][static_cast<size_t>(x)] = 0;
        std::vector<int> row(static_cast<size_t>(x), -1);
        for (size_t i = 0; i < a.size(); ++i) row[static_cast<size_t>(a[i])] = f[i];
        for (int y = 0; y < x; ++y) {
            if (row[static_cast<size_t>(y)] >= 0) continue;
            std::vector<int> vals = admissible_values(m, s.dist, row, y);
            if (vals.empty()) throw std::logic_error("free fill ran out of admissible values");
            // Free coordinates go where witnesses are scarcest, so padding
            // points keep serving the remaining demands instead of piling up
            // on the maximum distance.
            int best = vals[0];
            long best_score = -1;
            for (int v : vals) {
                long score = 0;
                for (int z = 0; z < x; ++z)
                    if (z != y && s.d(z, y) == v) ++score;
                score = 2 * std::max(0L, static_cast<long>(mult) - score);
                for (int y2 = 0; y2 < x; ++y2) {
                    if (y2 == y || row[static_cast<size_t>(y2)] < 0) continue;
                    if (witness_count({y, y2}, {v, row[static_cast<size_t>(y2)]}) < mult)
                        ++score;
                }
                if (score > best_score) {
                    best_score = score;
                    best = v;
                }
            }
            row[static_cast<size_t>(y)] = best;
        }
        for (int y = 0; y < x; ++y) {
            s.dist[static_cast<size_t>(x)][static_cast<size_t>(y)] = row[static_cast<size_t>(y)];
            s.dist[static_cast<size_t>(y)][static_cast<size_t>(x)] = row[static_cast<size_t>(y)];
        }
    };

    while (true) {
        auto unmet = next_unmet();
        if (!unmet && s.n >= n) break;
        if (s.n == n) {
            std::string msg = "infeasible: demand over subset {";
            for (size_t i = 0; i < unmet->first.size(); ++i)
                msg += (i ? "," : "") + std::to_string(unmet->first[i]);
            msg += "} with pattern (";
            for (size_t i = 0; i < unmet->second.size(); ++i)
                msg += (i ? "," : "") + m.labels[static_cast<size_t>(unmet->second[i])];
            msg += ") lacks witnesses at size " + std::to_string(n);
            throw std::runtime_error(msg);
        }
        if (unmet)
            append_point(unmet->first, unmet->second);
        else
            append_point({}, {});
    }
    return s;
}

FinStructure space_to_structure(const RMetricSpace& s) {
    std::vector<RelationSymbol> symbols;
    for (const std::string& lab : s.monoid.labels) symbols.push_back({"d_" + lab, 2});
    FinStructure out(make_signature(std::move(symbols)), s.n);
    for (int r = 0; r < s.monoid.size(); ++r) {
        int rel = out.signature().index_of("d_" + s.monoid.labels[static_cast<size_t>(r)]);
        for (int x = 0; x < s.n; ++x)
            for (int y = 0; y < s.n; ++y)
                if (s.d(x, y) <= r) out.add(rel, x, y);
    }
    out.canonicalize();
    return out;
}

RMetricSpace space_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RMetricSpace s;
    s.monoid = monoid_from_json(j.at("monoid").dump());
    s.n = j.at("size").get<int>();
    s.dist = j.at("dist").get<std::vector<std::vector<int>>>();
    return s;
}

std::string space_to_json(const RMetricSpace& s) {
    nlohmann::ordered_json j;
    j["monoid"] = nlohmann::ordered_json::parse(monoid_to_json(s.monoid));
    j["size"] = s.n;
    j["dist"] = s.dist;
    return j.dump(2) + "\n";
}

RMetricSpace load_space(const std::string& path) { return space_from_json(read_text_file(path)); }

void save_space(const RMetricSpace& s, const std::string& path) {
    write_text_file(path, space_to_json(s));
}

}  // namespace homoglab
