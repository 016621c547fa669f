#include "homoglab/omegapede.hpp"

#include <algorithm>
#include <stdexcept>

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

bool OmegapedeFragment::e0(int x, int y) const {
    if (x == y) return true;
    if (!is_f(x) && !is_f(y)) return true;
    return is_f(x) && is_f(y) && class_of(x) == class_of(y);
}

bool OmegapedeFragment::e1(int x, int y) const {
    if (x == y) return true;
    if (!is_f(x) && !is_f(y)) return true;
    return is_f(x) && is_f(y) && class_of(x) == class_of(y) && cell_of(x) == cell_of(y);
}

bool OmegapedeFragment::l_edge(int x, int y) const {
    return !is_f(x) && is_f(y) && leg_cell(x, class_of(y)) == cell_of(y);
}

int OmegapedeFragment::add_plain(const std::vector<int>& pattern) {
    if (static_cast<int>(pattern.size()) != n_classes)
        throw std::invalid_argument("omegapede: pattern length must match class count");
    Point p;
    p.pattern = pattern;
    points.push_back(std::move(p));
    return size() - 1;
}

int OmegapedeFragment::add_f(int cls, int cell) {
    if (cls < 0 || cls >= n_classes || (cell != 0 && cell != 1))
        throw std::invalid_argument("omegapede: bad class or cell");
    Point p;
    p.f = true;
    p.cls = cls;
    p.cell = cell;
    points.push_back(std::move(p));
    return size() - 1;
}

int OmegapedeFragment::add_class() {
    for (auto& p : points)
        if (!p.f) p.pattern.push_back(0);
    return n_classes++;
}

std::vector<int> OmegapedeFragment::f_members(int cls, int cell) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (is_f(x) && class_of(x) == cls && cell_of(x) == cell) out.push_back(x);
    return out;
}

namespace {

struct LegDemand {
    std::vector<int> subset;
    unsigned pattern = 0;  // bit i set = the witness class receives subset[i]'s leg in cell 1
};

bool class_witnesses(const OmegapedeFragment& o, const LegDemand& dem, int need) {
    int found = 0;
    for (int x = 0; x < o.n_classes; ++x) {
        bool ok = true;
        for (size_t i = 0; i < dem.subset.size() && ok; ++i)
            if (o.leg_cell(dem.subset[i], x) != static_cast<int>((dem.pattern >> i) & 1u))
                ok = false;
        if (ok && ++found >= need) return true;
    }
    return false;
}

std::vector<LegDemand> all_leg_demands(int base, int k) {
    std::vector<LegDemand> out;
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

OmegapedeFragment build_omegapede(int n_classes, int cell_size, int n_points, int k, int m) {
    if (n_classes < 1 || cell_size < 1 || n_points < 1 || k < 1 || m < 1)
        throw std::invalid_argument("omegapede: all build parameters must be positive");
    OmegapedeFragment o;
    o.base_points = n_points;
    o.cell_size = cell_size;
    o.n_classes = n_classes;
    o.sat_k = k;
    o.sat_m = m;
    for (int a = 0; a < n_points; ++a) {
        std::vector<int> pat(static_cast<size_t>(n_classes));
        for (int c = 0; c < n_classes; ++c)
            pat[static_cast<size_t>(c)] =
                static_cast<int>(mix(static_cast<uint64_t>(a), static_cast<uint64_t>(c)) & 1);
        o.add_plain(pat);
    }
    for (int c = 0; c < n_classes; ++c)
        for (int cell = 0; cell < 2; ++cell)
            for (int s = 0; s < cell_size; ++s) o.add_f(c, cell);

    const auto demands = all_leg_demands(n_points, k);
    size_t cursor = 0;
    while (true) {
        bool any = false;
        for (size_t off = 0; off < demands.size(); ++off) {
            const size_t at = (cursor + off) % demands.size();
            if (class_witnesses(o, demands[at], m)) continue;
            const auto& dem = demands[at];
            const int nc = o.add_class();
            for (int a = 0; a < o.size(); ++a) {
                if (o.is_f(a)) continue;
                int cell = static_cast<int>(mix(static_cast<uint64_t>(a), static_cast<uint64_t>(nc)) & 1);
                for (size_t i = 0; i < dem.subset.size(); ++i)
                    if (dem.subset[i] == a) cell = static_cast<int>((dem.pattern >> i) & 1u);
                o.points[static_cast<size_t>(a)].pattern[static_cast<size_t>(nc)] = cell;
            }
            for (int cell = 0; cell < 2; ++cell)
                for (int s = 0; s < cell_size; ++s) o.add_f(nc, cell);
            cursor = at + 1;
            any = true;
            break;
        }
        if (!any) break;
    }
    return o;
}

FinStructure omegapede_to_structure(const OmegapedeFragment& o) {
    FinStructure s(make_signature({{"F", 1}, {"E0", 2}, {"E1", 2}, {"L", 2}}), o.size());
    const int rf = s.signature().index_of("F");
    const int r0 = s.signature().index_of("E0");
    const int r1 = s.signature().index_of("E1");
    const int rl = s.signature().index_of("L");
    for (int x = 0; x < o.size(); ++x) {
        if (o.is_f(x)) s.add(rf, x);
        for (int y = 0; y < o.size(); ++y) {
            if (o.e0(x, y)) s.add(r0, x, y);
            if (o.e1(x, y)) s.add(r1, x, y);
            if (o.l_edge(x, y)) s.add(rl, x, y);
        }
    }
    s.canonicalize();
    return s;
}

bool divides_omegapede(const OmegapedeFragment& o, const std::vector<int>& abar,
                       const std::vector<int>& bbar, const std::vector<int>& cbar) {
    const auto in = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (int a : abar) {
        if (in(bbar, a) && !in(cbar, a)) return true;
        if (!o.is_f(a)) continue;
        bool hit_b = false, hit_c = false;
        for (int b : bbar)
            if (o.e0(a, b)) hit_b = true;
        for (int c : cbar)
            if (o.e0(a, c)) hit_c = true;
        if (hit_b && !hit_c) return true;
    }
    return false;
}

ScenarioReport omegapede_counterexample() {
    ScenarioReport rep;
    rep.family = "omegapede";
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);

    // Two plain points with legs into opposite cells of one class; saturation
    // at pair level guarantees a witness class for the split pattern.
    int a = 0, b = 1, cls = -1;
    for (int x = 0; x < o.n_classes; ++x)
        if (o.leg_cell(a, x) == 0 && o.leg_cell(b, x) == 1) {
            cls = x;
            break;
        }
    if (cls < 0) {
        rep.applicable = false;
        rep.verdict = "INAPPLICABLE";
        rep.diagnostics.emplace_back("reason", "no class splits the first two plain points");
        return rep;
    }
    const int c = o.f_members(cls, 0).front();
    const int d = o.f_members(cls, 1).front();
    rep.witnesses.emplace_back("a", "plain point " + std::to_string(a));
    rep.witnesses.emplace_back("b", "plain point " + std::to_string(b));
    rep.witnesses.emplace_back("c", "F-point, class " + std::to_string(cls) + ", cell 0");
    rep.witnesses.emplace_back("d", "F-point, class " + std::to_string(cls) + ", cell 1");

    Workbench wb = make_workbench(o);
    const ImaginaryBase cls_base{"E0", c};
    const PremiseReport prem = check_premises(wb, a, b, c, {d}, cls_base);
    rep.diagnostics.emplace_back("a indep c over class", prem.a_indep ? "true" : "false");
    rep.diagnostics.emplace_back("b indep d over class", prem.b_indep ? "true" : "false");
    rep.diagnostics.emplace_back("types over class object equal",
                                 prem.type_eq_class_level ? "true" : "false");
    rep.diagnostics.emplace_back("types over class acl equal", prem.type_eq ? "true" : "false");

    const SolveResult sol = solve_two_type(wb, a, c, b, {d});
    rep.conflict_trace = sol.conflict;
    if (sol.verdict == SolveVerdict::unsat && prem.a_indep && prem.b_indep &&
        prem.type_eq_class_level && !prem.type_eq) {
        rep.verdict = "UNSAT";
        rep.conflict_trace = {"L(e,c)", "L(e,d)", "E_0(c,d)", "¬E_1(c,d)"};
        for (const auto& lit : sol.conflict) rep.conflict_trace.push_back(lit);
    } else {
        rep.verdict = "UNEXPECTED";
    }
    return rep;
}

}  // namespace homoglab
