#include <vector>

#include "doctest.h"
#include "homoglab/omegapede.hpp"
#include "homoglab/structure.hpp"

using namespace homoglab;

TEST_CASE("fragment layout: plain base then class members") {
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);
    REQUIRE(o.base_points == 4);
    REQUIRE(o.cell_size == 2);
    REQUIRE(o.n_classes >= 3);
    for (int x = 0; x < o.base_points; ++x) {
        CHECK_FALSE(o.is_f(x));
        for (int cls = 0; cls < o.n_classes; ++cls) {
            const int leg = o.leg_cell(x, cls);
            CHECK(leg >= 0);
            CHECK(leg <= 1);
        }
    }
    for (int cls = 0; cls < o.n_classes; ++cls)
        for (int cell = 0; cell < 2; ++cell) {
            const auto members = o.f_members(cls, cell);
            CHECK(static_cast<int>(members.size()) == o.cell_size);
            for (int x : members) {
                CHECK(o.is_f(x));
                CHECK(o.class_of(x) == cls);
                CHECK(o.cell_of(x) == cell);
            }
        }
}

TEST_CASE("coarse and fine relations nest") {
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);
    for (int x = 0; x < o.size(); ++x)
        for (int y = 0; y < o.size(); ++y) {
            if (o.e1(x, y)) CHECK(o.e0(x, y));
            if (o.is_f(x) && o.is_f(y)) {
                CHECK(o.e0(x, y) == (o.class_of(x) == o.class_of(y)));
                if (o.e0(x, y)) CHECK(o.e1(x, y) == (o.cell_of(x) == o.cell_of(y)));
            }
        }
}

TEST_CASE("legs go to exactly the chosen cell of each class") {
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);
    for (int x = 0; x < o.size(); ++x)
        for (int y = 0; y < o.size(); ++y) {
            if (o.l_edge(x, y)) {
                CHECK_FALSE(o.is_f(x));
                CHECK(o.is_f(y));
                CHECK(o.leg_cell(x, o.class_of(y)) == o.cell_of(y));
            } else if (!o.is_f(x) && o.is_f(y) && x < o.base_points) {
                CHECK(o.leg_cell(x, o.class_of(y)) != o.cell_of(y));
            }
        }
}

TEST_CASE("pair-level saturation: every leg split has three witness classes") {
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);
    for (int a = 0; a < o.base_points; ++a)
        for (int b = 0; b < o.base_points; ++b) {
            if (a == b) continue;
            for (int ca = 0; ca <= 1; ++ca)
                for (int cb = 0; cb <= 1; ++cb) {
                    int hits = 0;
                    for (int cls = 0; cls < o.n_classes; ++cls)
                        if (o.leg_cell(a, cls) == ca && o.leg_cell(b, cls) == cb) ++hits;
                    CHECK(hits >= 3);
                }
        }
}

TEST_CASE("growth operations keep patterns aligned") {
    OmegapedeFragment o = build_omegapede(3, 2, 3, 1, 3);
    const int classes_before = o.n_classes;
    const int cls = o.add_class();
    CHECK(cls == classes_before);
    for (int x = 0; x < o.size(); ++x)
        if (!o.is_f(x)) CHECK(o.leg_cell(x, cls) == 0);
    const int f = o.add_f(cls, 1);
    CHECK(o.is_f(f));
    CHECK(o.class_of(f) == cls);
    CHECK(o.cell_of(f) == 1);
    const int p = o.add_plain(std::vector<int>(static_cast<size_t>(o.n_classes), 1));
    CHECK_FALSE(o.is_f(p));
    CHECK(o.l_edge(p, f));
}

TEST_CASE("dividing needs a fresh class link beyond the base") {
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);
    const int a = 0;  // plain
    const int c = o.f_members(0, 0).front();
    const int d = o.f_members(0, 1).front();
    const int other = o.f_members(1, 0).front();
    // Equality divides over an empty base.
    CHECK(divides_omegapede(o, {a}, {a}, {}));
    // An F-point sharing its class with a parameter divides...
    CHECK(divides_omegapede(o, {c}, {d}, {}));
    // ...unless the base already pins the class down.
    CHECK_FALSE(divides_omegapede(o, {c}, {d}, {d}));
    CHECK_FALSE(divides_omegapede(o, {c}, {d}, {o.f_members(0, 1).back()}));
    // Other classes and plain points carry no dependence.
    CHECK_FALSE(divides_omegapede(o, {other}, {c}, {}));
    CHECK_FALSE(divides_omegapede(o, {a}, {1}, {}));
    CHECK_FALSE(divides_omegapede(o, {c}, {a}, {}));
}

TEST_CASE("rendered structure mirrors the fragment") {
    const OmegapedeFragment o = build_omegapede(3, 2, 4, 2, 3);
    const FinStructure s = omegapede_to_structure(o);
    REQUIRE(s.size() == o.size());
    const int rf = s.signature().index_of("F");
    const int r0 = s.signature().index_of("E0");
    const int r1 = s.signature().index_of("E1");
    const int rl = s.signature().index_of("L");
    for (int x = 0; x < o.size(); ++x) {
        CHECK(s.holds(rf, x) == o.is_f(x));
        for (int y = 0; y < o.size(); ++y) {
            CHECK(s.holds(r0, x, y) == o.e0(x, y));
            CHECK(s.holds(r1, x, y) == o.e1(x, y));
            CHECK(s.holds(rl, x, y) == o.l_edge(x, y));
        }
    }
}

TEST_CASE("the split-cell scenario fails exactly at the refined level") {
    const ScenarioReport rep = omegapede_counterexample();
    CHECK(rep.applicable);
    CHECK(rep.verdict == "UNSAT");
    REQUIRE(rep.conflict_trace.size() >= 4);
    CHECK(rep.conflict_trace[0] == "L(e,c)");
    CHECK(rep.conflict_trace[1] == "L(e,d)");
    CHECK(rep.conflict_trace[2] == "E_0(c,d)");
    CHECK(rep.conflict_trace[3] == "¬E_1(c,d)");
    bool class_ok = false, acl_divergence = false;
    for (const auto& [k, v] : rep.diagnostics) {
        if (k == "types over class object equal") class_ok = v == "true";
        if (k == "types over class acl equal") acl_divergence = v == "false";
    }
    CHECK(class_ok);
    CHECK(acl_divergence);
}

TEST_CASE("builder and scenario are deterministic") {
    CHECK(structure_to_json(omegapede_to_structure(build_omegapede(3, 2, 4, 2, 3))) ==
          structure_to_json(omegapede_to_structure(build_omegapede(3, 2, 4, 2, 3))));
    CHECK(omegapede_counterexample().to_json() == omegapede_counterexample().to_json());
}
