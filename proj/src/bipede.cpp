#include "homoglab/bipede.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "homoglab/extension.hpp"
#include "homoglab/indep.hpp"

namespace homoglab {

namespace {

uint64_t mix(uint64_t x, uint64_t y) {
    uint64_t z = x * 0x9E3779B97F4A7C15ull + y * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    return z;
}

}  // namespace

int BipedeFragment::body_at(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (int t = 0; t < body_count(); ++t)
        if (bodies[static_cast<size_t>(t)][0] == i && bodies[static_cast<size_t>(t)][1] == j)
            return t;
    return -1;
}

int BipedeFragment::red_foot(int t) const {
    const auto& b = bodies[static_cast<size_t>(t)];
    return b[2] == b[0] ? b[1] : b[0];
}

bool BipedeFragment::body_has_foot(int t, int f) const {
    const auto& b = bodies[static_cast<size_t>(t)];
    return b[0] == f || b[1] == f;
}

int BipedeFragment::shared_foot(int t1, int t2) const {
    if (t1 == t2) return -1;
    const auto& x = bodies[static_cast<size_t>(t1)];
    const auto& y = bodies[static_cast<size_t>(t2)];
    if (x[0] == y[0] || x[0] == y[1]) return x[0];
    if (x[1] == y[0] || x[1] == y[1]) return x[1];
    return -1;
}

std::string BipedeFragment::body_name(int t) const {
    const auto& b = bodies[static_cast<size_t>(t)];
    return "{" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "}";
}

int BipedeFragment::add_body(int i, int j, int blue) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= feet || i == j) throw std::invalid_argument("bipede: bad body feet");
    if (blue != i && blue != j) throw std::invalid_argument("bipede: blue end must be a foot of the body");
    bodies.push_back({i, j, blue});
    return body_count() - 1;
}

namespace {

// One demand: for each position in `subset` the body joining it to a witness
// foot must have its blue end as `pattern` prescribes (bit set = blue at the
// subset foot).
struct FootDemand {
    std::vector<int> subset;
    unsigned pattern = 0;
};

bool foot_witnesses(const BipedeFragment& b, const FootDemand& dem, int need) {
    int found = 0;
    for (int g = 0; g < b.feet; ++g) {
        bool in = false, ok = true;
        for (size_t i = 0; i < dem.subset.size() && ok; ++i) {
            const int a = dem.subset[i];
            if (a == g) {
                in = true;
                break;
            }
            const int t = b.body_at(a, g);
            const bool want_blue_at_a = (dem.pattern >> i) & 1u;
            if (t < 0 || b.blue_at(t, a) != want_blue_at_a) ok = false;
        }
        if (!in && ok && ++found >= need) return true;
    }
    return false;
}

std::vector<FootDemand> all_foot_demands(int base, int k) {
    std::vector<FootDemand> out;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (!cur.empty()) subsets.push_back(cur);
        if (left == 0) return;
        for (int v = start; v < base; ++v) {
            cur.push_back(v);
            self(self, v + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    for (const auto& s : subsets)
        for (unsigned p = 0; p < (1u << s.size()); ++p) out.push_back({s, p});
    return out;
}

}  // namespace

BipedeFragment build_bipede(int n_feet, int k, int m) {
    if (n_feet < 1 || k < 1 || m < 1)
        throw std::invalid_argument("bipede: feet, level and multiplicity must be positive");
    BipedeFragment b;
    b.base_feet = n_feet;
    b.sat_k = k;
    b.sat_m = m;
    for (int f = 0; f < n_feet; ++f) b.add_foot();
    for (int i = 0; i < n_feet; ++i)
        for (int j = i + 1; j < n_feet; ++j)
            b.add_body(i, j, mix(static_cast<uint64_t>(i), static_cast<uint64_t>(j)) & 1 ? i : j);

    const auto demands = all_foot_demands(n_feet, k);
    size_t cursor = 0;
    while (true) {
        bool any = false;
        for (size_t off = 0; off < demands.size(); ++off) {
            const size_t at = (cursor + off) % demands.size();
            if (foot_witnesses(b, demands[at], m)) continue;
            const auto& dem = demands[at];
            const int nf = b.add_foot();
            for (int g = 0; g < nf; ++g) {
                int blue = mix(static_cast<uint64_t>(g), static_cast<uint64_t>(nf)) & 1 ? g : nf;
                for (size_t i = 0; i < dem.subset.size(); ++i)
                    if (dem.subset[i] == g) blue = (dem.pattern >> i) & 1u ? g : nf;
                b.add_body(g, nf, blue);
            }
            cursor = at + 1;
            any = true;
            break;
        }
        if (!any) break;
    }
    return b;
}

FinStructure bipede_to_structure(const BipedeFragment& b) {
    FinStructure s(make_signature({{"F", 1}, {"L", 2}, {"B", 2}, {"R", 2}}), b.feet + b.body_count());
    const int rf = s.signature().index_of("F");
    const int rl = s.signature().index_of("L");
    const int rb = s.signature().index_of("B");
    const int rr = s.signature().index_of("R");
    for (int f = 0; f < b.feet; ++f) s.add(rf, f);
    for (int t = 0; t < b.body_count(); ++t) {
        const auto [i, j] = b.body_feet(t);
        s.add(rl, b.body_id(t), i);
        s.add(rl, b.body_id(t), j);
        s.add(rb, b.body_id(t), b.blue_foot(t));
        s.add(rr, b.body_id(t), b.red_foot(t));
    }
    s.canonicalize();
    return s;
}

FinStructure bipede_reduct(const BipedeFragment& b) {
    FinStructure s(make_signature({{"s_bb", 2}, {"s_br", 2}, {"s_rb", 2}, {"s_rr", 2}, {"disj", 2}}),
                   b.body_count());
    const int bb = s.signature().index_of("s_bb");
    const int br = s.signature().index_of("s_br");
    const int rb = s.signature().index_of("s_rb");
    const int rr = s.signature().index_of("s_rr");
    const int dj = s.signature().index_of("disj");
    for (int t1 = 0; t1 < b.body_count(); ++t1)
        for (int t2 = 0; t2 < b.body_count(); ++t2) {
            if (t1 == t2) continue;
            const int f = b.shared_foot(t1, t2);
            if (f < 0) {
                s.add(dj, t1, t2);
            } else if (b.blue_at(t1, f)) {
                s.add(b.blue_at(t2, f) ? bb : br, t1, t2);
            } else {
                s.add(b.blue_at(t2, f) ? rb : rr, t1, t2);
            }
        }
    s.canonicalize();
    return s;
}

std::vector<int> bipede_cl(const BipedeFragment& b, const std::vector<int>& elems) {
    std::set<int> feet, out;
    for (int id : elems) {
        out.insert(id);
        if (b.id_is_body(id)) {
            const auto [i, j] = b.body_feet(id - b.feet);
            feet.insert(i);
            feet.insert(j);
        } else {
            feet.insert(id);
        }
    }
    for (int f : feet) out.insert(f);
    for (auto it = feet.begin(); it != feet.end(); ++it)
        for (auto jt = std::next(it); jt != feet.end(); ++jt) {
            const int t = b.body_at(*it, *jt);
            if (t >= 0) out.insert(b.body_id(t));
        }
    return {out.begin(), out.end()};
}

bool divides_bipede(const BipedeFragment& b, const std::vector<int>& abar,
                    const std::vector<int>& bbar, const std::vector<int>& cbar) {
    std::vector<int> bc_ids, c_ids;
    for (int t : bbar) bc_ids.push_back(b.body_id(t));
    for (int t : cbar) {
        bc_ids.push_back(b.body_id(t));
        c_ids.push_back(b.body_id(t));
    }
    const auto cl_bc = bipede_cl(b, bc_ids);
    const auto cl_c = bipede_cl(b, c_ids);
    const auto in = [](const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    for (int a : abar) {
        if (in(cl_bc, b.body_id(a)) && !in(cl_c, b.body_id(a))) return true;
        bool touches_base = false;
        for (int c : cbar)
            if (a == c || b.shared_foot(a, c) >= 0) touches_base = true;
        if (touches_base) continue;
        for (int bb : bbar)
            if (a == bb || b.shared_foot(a, bb) >= 0) return true;
    }
    return false;
}

ScenarioReport bipede_counterexample() {
    ScenarioReport rep;
    rep.family = "bipede";
    const BipedeFragment bp = build_bipede(5, 2, 3);

    // Feet i,j,k,l,m with bodies a={i,j} blue at j, c={j,l} blue at l,
    // b={k,l} blue at l, d={l,m} blue at m.
    int fi = -1, fj = -1, fk = -1, fl = -1, fm = -1;
    for (int l = 0; l < bp.feet && fl < 0; ++l) {
        std::vector<int> blue_at_l, red_at_l;
        for (int g = 0; g < bp.feet; ++g) {
            if (g == l) continue;
            const int t = bp.body_at(g, l);
            (bp.blue_at(t, l) ? blue_at_l : red_at_l).push_back(g);
        }
        for (size_t x = 0; x < blue_at_l.size() && fl < 0; ++x)
            for (size_t y = 0; y < blue_at_l.size() && fl < 0; ++y) {
                if (x == y) continue;
                const int j = blue_at_l[x], k = blue_at_l[y];
                for (int i = 0; i < bp.feet && fl < 0; ++i) {
                    if (i == j || i == k || i == l) continue;
                    if (!bp.blue_at(bp.body_at(i, j), j)) continue;
                    for (int m : red_at_l) {
                        if (m == i || m == j || m == k) continue;
                        fi = i, fj = j, fk = k, fl = l, fm = m;
                        break;
                    }
                }
            }
    }
    if (fl < 0) {
        rep.applicable = false;
        rep.verdict = "INAPPLICABLE";
        rep.diagnostics.emplace_back("reason", "fragment too small for the foot pattern");
        return rep;
    }

    const int a = bp.body_at(fi, fj);
    const int b = bp.body_at(fk, fl);
    const int c = bp.body_at(fj, fl);
    const int d = bp.body_at(fl, fm);
    rep.witnesses.emplace_back("a", bp.body_name(a) + " blue at " + std::to_string(fj));
    rep.witnesses.emplace_back("b", bp.body_name(b) + " blue at " + std::to_string(fl));
    rep.witnesses.emplace_back("c", bp.body_name(c) + " blue at " + std::to_string(fl));
    rep.witnesses.emplace_back("d", bp.body_name(d) + " blue at " + std::to_string(fm));

    Workbench wb = make_workbench(bp);
    const ImaginaryBase cls{"EB", c};
    const bool cd_indep = !divides_over_class(wb, c, {d}, cls);
    const bool bd_indep = !divides_over_class(wb, b, {d}, cls);
    const bool ac_dep = divides_over_class(wb, a, {c}, cls);
    rep.diagnostics.emplace_back("c indep d over class", cd_indep ? "true" : "false");
    rep.diagnostics.emplace_back("b indep d over class", bd_indep ? "true" : "false");
    rep.diagnostics.emplace_back("a divides over c", ac_dep ? "true" : "false");

    // Scan the rendered reduct relations rather than trusting construction:
    // s_bb and s_rr extended by the diagonal must be transitive, and their
    // intersection must be empty off the diagonal.
    const FinStructure red = bipede_reduct(bp);
    const int n = red.size();
    const size_t words = static_cast<size_t>(n + 63) / 64;
    const auto matrix_of = [&](const char* name) {
        std::vector<uint64_t> rows(static_cast<size_t>(n) * words, 0);
        const auto set = [&](int x, int y) {
            rows[static_cast<size_t>(x) * words + static_cast<size_t>(y) / 64] |=
                uint64_t{1} << (y % 64);
        };
        for (const auto& t : red.tuples(red.signature().index_of(name))) set(t[0], t[1]);
        for (int x = 0; x < n; ++x) set(x, x);
        return rows;
    };
    const auto is_transitive = [&](const std::vector<uint64_t>& rows) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!((rows[static_cast<size_t>(x) * words + static_cast<size_t>(y) / 64] >>
                       (y % 64)) &
                      1))
                    continue;
                for (size_t w = 0; w < words; ++w) {
                    const uint64_t extra = rows[static_cast<size_t>(y) * words + w] &
                                           ~rows[static_cast<size_t>(x) * words + w];
                    if (extra) return false;
                }
            }
        return true;
    };
    const auto ebm = matrix_of("s_bb");
    const auto erm = matrix_of("s_rr");
    const bool transitive = is_transitive(ebm) && is_transitive(erm);
    bool eq_intersection = true;
    for (int x = 0; x < n && eq_intersection; ++x)
        for (size_t w = 0; w < words; ++w) {
            uint64_t both = ebm[static_cast<size_t>(x) * words + w] &
                            erm[static_cast<size_t>(x) * words + w];
            if (static_cast<size_t>(x) / 64 == w) both &= ~(uint64_t{1} << (x % 64));
            if (both) {
                eq_intersection = false;
                break;
            }
        }
    rep.diagnostics.emplace_back("EB and ER intersect in equality", eq_intersection ? "true" : "false");
    rep.diagnostics.emplace_back("EB and ER transitive", transitive ? "true" : "false");

    const SolveResult sol = solve_two_type(wb, a, c, b, {d});
    rep.conflict_trace = sol.conflict;
    if (sol.verdict == SolveVerdict::unsat && cd_indep && bd_indep && ac_dep &&
        eq_intersection && transitive) {
        rep.verdict = "UNSAT";
        rep.conflict_trace.push_back("R(e,m) contradicts tp(e,d)=tp(b,d)");
    } else {
        rep.verdict = "UNEXPECTED";
    }
    return rep;
}

}  // namespace homoglab
