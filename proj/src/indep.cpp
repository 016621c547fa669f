#include "homoglab/indep.hpp"

#include <algorithm>
#include <stdexcept>

#include "homoglab/extension.hpp"

namespace homoglab {

Family family_from_name(const std::string& name) {
    if (name == "urysohn") return Family::urysohn;
    if (name == "crosscut") return Family::crosscut;
    if (name == "bipede") return Family::bipede;
    if (name == "omegapede") return Family::omegapede;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::urysohn: return "urysohn";
        case Family::crosscut: return "crosscut";
        case Family::bipede: return "bipede";
        case Family::omegapede: return "omegapede";
    }
    return "?";
}

int Workbench::size() const {
    switch (family) {
        case Family::urysohn: return space.n;
        case Family::crosscut: return crosscut.size();
        case Family::bipede: return bipede.body_count();
        case Family::omegapede: return omegapede.size();
    }
    return 0;
}

Workbench make_workbench(RMetricSpace s) {
    Workbench w;
    w.family = Family::urysohn;
    w.space = std::move(s);
    return w;
}

Workbench make_workbench(Crosscut c) {
    Workbench w;
    w.family = Family::crosscut;
    w.crosscut = std::move(c);
    return w;
}

Workbench make_workbench(BipedeFragment b) {
    Workbench w;
    w.family = Family::bipede;
    w.bipede = std::move(b);
    return w;
}

Workbench make_workbench(OmegapedeFragment o) {
    Workbench w;
    w.family = Family::omegapede;
    w.omegapede = std::move(o);
    return w;
}

namespace {

int monoid_value_of(const DistanceMonoid& m, const std::string& rel) {
    if (rel.rfind("d_", 0) != 0) return -1;
    const std::string label = rel.substr(2);
    for (int i = 0; i < m.size(); ++i)
        if (m.labels[static_cast<size_t>(i)] == label) return i;
    return -1;
}

bool pins_p(const std::string& rel) { return rel == "P" || rel == "PQ" || rel == "EQ"; }
bool pins_q(const std::string& rel) { return rel == "Q" || rel == "PQ" || rel == "EQ"; }

// Classes with exactly one member concede the representative itself.
bool singleton_class(const Workbench& wb, const ImaginaryBase& cls) {
    if (wb.family == Family::crosscut) return cls.relation == "EQ";
    if (wb.family == Family::urysohn)
        return monoid_value_of(wb.space.monoid, cls.relation) == 0;
    return false;
}

int bipede_anchor(const BipedeFragment& b, const ImaginaryBase& cls) {
    if (cls.relation == "EB") return b.blue_foot(cls.representative);
    if (cls.relation == "ER") return b.red_foot(cls.representative);
    throw std::invalid_argument("unknown bipede relation: " + cls.relation);
}

}  // namespace

bool divides_closed(const Workbench& wb, int a, int b, const std::vector<int>& base) {
    auto in_base = [&](int x) {
        return std::find(base.begin(), base.end(), x) != base.end();
    };
    if (in_base(a) || in_base(b)) return false;
    switch (wb.family) {
        case Family::urysohn:
            return divides_urysohn(wb.space, a, b, base);
        case Family::crosscut: {
            const Crosscut& c = wb.crosscut;
            if (a == b) return true;
            if (c.same_p(a, b)) {
                bool shared = false;
                for (int x : base) shared |= c.same_p(b, x);
                if (!shared) return true;
            }
            if (c.same_q(a, b)) {
                bool shared = false;
                for (int x : base) shared |= c.same_q(b, x);
                if (!shared) return true;
            }
            return false;
        }
        case Family::bipede:
            return divides_bipede(wb.bipede, {a}, {b}, base);
        case Family::omegapede:
            return divides_omegapede(wb.omegapede, {a}, {b}, base);
    }
    return false;
}

bool divides_over_class(const Workbench& wb, int a, const std::vector<int>& bbar,
                        const ImaginaryBase& cls) {
    if (cls.relation == "TOTAL") {
        for (int d : bbar)
            if (divides_closed(wb, a, d, {})) return true;
        return false;
    }
    const int rep = cls.representative;
    switch (wb.family) {
        case Family::urysohn: {
            const DistanceMonoid& m = wb.space.monoid;
            const int r = monoid_value_of(m, cls.relation);
            if (r < 0) throw std::invalid_argument("unknown relation: " + cls.relation);
            if (r == 0) {
                for (int d : bbar)
                    if (divides_urysohn(wb.space, a, d, {rep})) return true;
                return false;
            }
            for (int d : bbar)
                if (m.twice(wb.space.d(a, d)) < r) return true;
            return false;
        }
        case Family::crosscut: {
            const Crosscut& c = wb.crosscut;
            for (int d : bbar) {
                if (a == d) {
                    if (!(cls.relation == "EQ" && d == rep)) return true;
                    continue;
                }
                if (c.same_p(a, d) && !(pins_p(cls.relation) && c.same_p(d, rep))) return true;
                if (c.same_q(a, d) && !(pins_q(cls.relation) && c.same_q(d, rep))) return true;
            }
            return false;
        }
        case Family::bipede: {
            const BipedeFragment& b = wb.bipede;
            const int anchor = bipede_anchor(b, cls);
            for (int d : bbar) {
                if (a == d) return true;
                const int g = b.shared_foot(a, d);
                if (g >= 0 && g != anchor) return true;
            }
            return false;
        }
        case Family::omegapede: {
            const OmegapedeFragment& o = wb.omegapede;
            for (int d : bbar) {
                if (a == d) return true;
                if (o.is_f(a) && o.is_f(d) && o.e0(a, d) && !o.e0(a, rep)) return true;
            }
            return false;
        }
    }
    return false;
}

ImaginaryBase find_independence_relation(const Workbench& wb, int c,
                                         const std::vector<int>& dbar) {
    if (wb.family == Family::urysohn) {
        const int r = find_independence_distance(wb.space, c, dbar);
        if (r < 0) return {"", -1};
        return {"d_" + wb.space.monoid.labels[static_cast<size_t>(r)], c};
    }
    std::vector<std::string> rels;
    switch (wb.family) {
        case Family::crosscut: rels = {"TOTAL", "P", "Q", "PQ", "EQ"}; break;
        case Family::bipede: rels = {"TOTAL", "EB", "ER"}; break;
        case Family::omegapede: rels = {"TOTAL", "E0", "E1"}; break;
        default: break;
    }
    for (const auto& rel : rels) {
        ImaginaryBase cand{rel, c};
        if (!divides_over_class(wb, c, dbar, cand)) return cand;
    }
    return {"", -1};
}

PremiseReport check_premises(const Workbench& wb, int a, int b, int c,
                             const std::vector<int>& dbar, const ImaginaryBase& cls) {
    PremiseReport out;
    out.a_indep = !divides_over_class(wb, a, {c}, cls);
    out.b_indep = !divides_over_class(wb, b, dbar, cls);
    const int rep = cls.representative;
    bool class_eq = true, acl_eq = true;
    if (cls.relation == "TOTAL") {
        acl_eq = point_kind(wb, a) == point_kind(wb, b);
    } else {
        switch (wb.family) {
            case Family::urysohn: {
                const DistanceMonoid& m = wb.space.monoid;
                const int r = monoid_value_of(m, cls.relation);
                if (r < 0) throw std::invalid_argument("unknown relation: " + cls.relation);
                const int da = wb.space.d(a, rep), db = wb.space.d(b, rep);
                class_eq = (da <= r) == (db <= r);
                acl_eq = class_eq;
                for (int s = r; s < m.size(); ++s)
                    if (m.twice(s) == s && (da <= s) != (db <= s)) acl_eq = false;
                if (r == 0 && da != db) acl_eq = false;
                break;
            }
            case Family::crosscut: {
                const Crosscut& cc = wb.crosscut;
                if (pins_p(cls.relation)) class_eq &= cc.same_p(a, rep) == cc.same_p(b, rep);
                if (pins_q(cls.relation)) class_eq &= cc.same_q(a, rep) == cc.same_q(b, rep);
                if (cls.relation == "EQ") class_eq &= (a == rep) == (b == rep);
                acl_eq = class_eq;
                break;
            }
            case Family::bipede: {
                const BipedeFragment& bb = wb.bipede;
                const int anchor = bipede_anchor(bb, cls);
                const bool ha = bb.body_has_foot(a, anchor), hb = bb.body_has_foot(b, anchor);
                class_eq = ha == hb && (!ha || bb.blue_at(a, anchor) == bb.blue_at(b, anchor));
                acl_eq = class_eq;
                break;
            }
            case Family::omegapede: {
                const OmegapedeFragment& o = wb.omegapede;
                class_eq = o.is_f(a) == o.is_f(b);
                if (class_eq) {
                    if (o.is_f(a)) {
                        class_eq = o.e0(a, rep) == o.e0(b, rep);
                        if (class_eq && cls.relation == "E1")
                            class_eq = o.e1(a, rep) == o.e1(b, rep);
                    } else if (cls.relation == "E1") {
                        class_eq = (o.leg_cell(a, o.class_of(rep)) == o.cell_of(rep)) ==
                                   (o.leg_cell(b, o.class_of(rep)) == o.cell_of(rep));
                    }
                }
                acl_eq = class_eq;
                if (acl_eq) {
                    if (!o.is_f(a))
                        acl_eq = o.leg_cell(a, o.class_of(rep)) == o.leg_cell(b, o.class_of(rep));
                    else if (o.e0(a, rep) && o.e0(b, rep) && a != b)
                        acl_eq = o.e1(a, b);
                }
                break;
            }
        }
    }
    out.type_eq_class_level = class_eq;
    out.type_eq = acl_eq;
    out.detail = std::string("a ") + (out.a_indep ? "independent from" : "divides over") +
                 " c; b " + (out.b_indep ? "independent from" : "divides over") +
                 " parameters; types over the class " +
                 (class_eq ? "agree" : "differ") + ", over its algebraic closure " +
                 (acl_eq ? "agree" : "differ");
    return out;
}

namespace {

// Membership demands a copy of x must satisfy toward the class representative.
void add_class_pins(const Workbench& wb, const ImaginaryBase& cls, int x, PointSpec* spec) {
    if (cls.relation.empty() || cls.relation == "TOTAL") return;
    const int rep = cls.representative;
    switch (wb.family) {
        case Family::urysohn: {
            const DistanceMonoid& m = wb.space.monoid;
            const int r = monoid_value_of(m, cls.relation);
            std::vector<int> allowed;
            if (r == 0) {
                // the d_0 class is the representative itself, so the exact
                // distance is part of the type, not just membership
                allowed.push_back(wb.space.d(x, rep));
            } else {
                const bool inside = wb.space.d(x, rep) <= r;
                for (int v = 1; v <= m.rmax(); ++v)
                    if ((v <= r) == inside) allowed.push_back(v);
            }
            spec->demands.push_back({rep, allowed});
            break;
        }
        case Family::crosscut: {
            const Crosscut& c = wb.crosscut;
            std::vector<int> allowed;
            for (int code = 0; code < 4; ++code) {
                if (pins_p(cls.relation) && ((code & 1) != 0) != c.same_p(x, rep)) continue;
                if (pins_q(cls.relation) && ((code & 2) != 0) != c.same_q(x, rep)) continue;
                allowed.push_back(code);
            }
            spec->demands.push_back({rep, allowed});
            break;
        }
        case Family::bipede: {
            const BipedeFragment& b = wb.bipede;
            const int anchor = bipede_anchor(b, cls);
            const int pin =
                b.body_has_foot(x, anchor) ? (b.blue_at(x, anchor) ? 0 : 1) : -1;
            spec->foot_pins.push_back({anchor, pin});
            break;
        }
        case Family::omegapede: {
            const OmegapedeFragment& o = wb.omegapede;
            if (o.is_f(x)) {
                std::vector<int> allowed;
                for (int code : {kOmFx | kOmFy, kOmFx | kOmFy | kOmE0,
                                 kOmFx | kOmFy | kOmE0 | kOmE1}) {
                    if (((code & kOmE0) != 0) != o.e0(x, rep)) continue;
                    if (cls.relation == "E1" && ((code & kOmE1) != 0) != o.e1(x, rep)) continue;
                    allowed.push_back(code);
                }
                spec->demands.push_back({rep, allowed});
            } else if (cls.relation == "E1") {
                const bool leg =
                    o.leg_cell(x, o.class_of(rep)) == o.cell_of(rep);
                spec->demands.push_back({rep, {kOmFy | (leg ? kOmLxy : 0)}});
            }
            break;
        }
    }
}

// Rep-facing demands that are sets rather than single codes leave the
// materializer a choice; these enumerate the choices so every variant of the
// copy family gets tested.
std::vector<std::optional<int>> rep_pin_choices(const Workbench& wb,
                                                const ImaginaryBase* cls, int b) {
    if (!cls || cls->relation.empty() || cls->relation == "TOTAL")
        return {std::nullopt};
    PointSpec probe;
    add_class_pins(wb, *cls, b, &probe);
    if (probe.demands.empty()) return {std::nullopt};
    std::vector<std::optional<int>> out;
    for (int code : probe.demands.front().second) out.push_back(code);
    return out;
}

}  // namespace

Tri divides_bruteforce(const Workbench& wb, const IndependenceQuery& q, int mult, int kcons) {
    if (q.a.size() != 1 || q.b.size() != 1 || q.imaginary.size() > 1)
        return Tri::inconclusive;
    const int a = q.a.front(), b = q.b.front();
    auto in_base = [&](int x) {
        return std::find(q.base.begin(), q.base.end(), x) != q.base.end();
    };
    if (in_base(a) || in_base(b)) return Tri::no;
    mult = std::max(mult, 2);
    kcons = std::clamp(kcons, 2, mult);
    const ImaginaryBase* cls = q.imaginary.empty() ? nullptr : &q.imaginary.front();
    if (cls && singleton_class(wb, *cls) &&
        (a == cls->representative || b == cls->representative))
        return Tri::no;

    const int kind_a = point_kind(wb, a), kind_b = point_kind(wb, b);
    const int ab_code = pair_code(wb, a, b);

    auto realizable = [&](const Workbench& cur, const PointSpec& spec) {
        for (int x = 0; x < cur.size(); ++x)
            if (spec_satisfied_by(cur, spec, x)) return true;
        return point_feasible(cur, spec);
    };

    for (int c2 : copy_pair_codes(wb, kind_b)) {
        for (std::optional<int> rep_code : rep_pin_choices(wb, cls, b)) {
            // Build the copy family twice with opposite materialization
            // preferences; a demanded type only counts as inconsistent when
            // both variants refuse it.
            bool witnessed = true;
            for (bool late : {false, true}) {
                Workbench w = wb;
                std::vector<int> seq{b};
                auto spec_for_copy = [&](const Workbench& cur) {
                    PointSpec spec;
                    spec.kind = kind_b;
                    spec.prefer_late = late;
                    for (int t : q.base) spec.demands.push_back({t, {pair_code(cur, b, t)}});
                    if (cls) {
                        if (rep_code)
                            spec.demands.push_back({cls->representative, {*rep_code}});
                        else
                            add_class_pins(cur, *cls, b, &spec);
                    }
                    for (int prev : seq)
                        spec.demands.push_back({prev, {transpose_pair_code(cur, c2)}});
                    return spec;
                };
                bool built = true;
                for (int t = 1; t < mult && built; ++t) {
                    auto id = try_append_point(w, spec_for_copy(w));
                    if (!id)
                        built = false;
                    else
                        seq.push_back(*id);
                }
                if (!built || !realizable(w, spec_for_copy(w))) {
                    witnessed = false;  // family does not extend past mult
                    break;
                }
                bool inconsistent = false;
                for (int s = 2; s <= kcons && !inconsistent; ++s) {
                    PointSpec xs;
                    xs.kind = kind_a;
                    for (int t : q.base) xs.demands.push_back({t, {pair_code(w, a, t)}});
                    if (cls) add_class_pins(w, *cls, a, &xs);
                    for (int i = 0; i < s; ++i) xs.demands.push_back({seq[static_cast<size_t>(i)], {ab_code}});
                    if (!realizable(w, xs)) inconsistent = true;
                }
                if (!inconsistent) {
                    witnessed = false;
                    break;
                }
            }
            if (witnessed) return Tri::yes;
        }
    }
    return Tri::no;
}

}  // namespace homoglab
