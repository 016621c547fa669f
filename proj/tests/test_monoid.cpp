#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "homoglab/distance_monoid.hpp"

using namespace homoglab;

namespace {

DistanceMonoid accepted(const std::vector<double>& values) {
    const TruncatedResult r = truncated_monoid(values);
    REQUIRE(r.ok);
    return r.monoid;
}

std::vector<std::string> labels_at(const DistanceMonoid& m, const std::vector<int>& idx) {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(m.labels[static_cast<size_t>(i)]);
    return out;
}

}  // namespace

TEST_CASE("truncated table over {0,1,3,4}") {
    const DistanceMonoid m = accepted({0, 1, 3, 4});
    REQUIRE(m.size() == 4);
    CHECK(m.labels == std::vector<std::string>{"0", "1", "3", "4"});
    CHECK(check_monoid(m).empty());
    // Spot entries: indices address the sorted value list.
    CHECK(m.add(0, 2) == 2);
    CHECK(m.add(1, 1) == 1);  // 1+1=2 rounds down to 1
    CHECK(m.add(1, 2) == 3);  // 1+3=4
    CHECK(m.add(2, 2) == 3);  // 3+3 truncates to 4
    CHECK(m.twice(3) == 3);
}

TEST_CASE("the {0,1,2,4} value set fails associativity") {
    const TruncatedResult r = truncated_monoid({0, 1, 2, 4});
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.rejection.has_value());
    CHECK(r.rejection->axiom == "associativity");
}

TEST_CASE("value sets must contain 0; duplicates collapse") {
    CHECK_THROWS_AS(truncated_monoid({1, 2}), std::invalid_argument);
    const TruncatedResult dup = truncated_monoid({0, 1, 1});
    CHECK(dup.ok);
    CHECK(dup.monoid.size() == 2);
    CHECK(truncated_monoid({0}).ok);
}

TEST_CASE("simplicity of the two fixture monoids") {
    CHECK(is_simple(accepted({0, 1, 3, 4})).simple);
    CHECK(is_simple(accepted({0, 1, 2})).simple);
}

TEST_CASE("plain truncation at 3 is not simple") {
    const DistanceMonoid m = accepted({0, 1, 2, 3});
    const SimplicityReport rep = is_simple(m);
    REQUIRE_FALSE(rep.simple);
    const int r = rep.witness[0];
    const int s = rep.witness[1];
    REQUIRE(r >= 0);
    CHECK(r <= s);
    CHECK(m.add(m.add(r, r), s) != m.add(r, s));
}

TEST_CASE("in a simple monoid every doubled value is idempotent") {
    for (const auto& values : {std::vector<double>{0, 1, 3, 4}, std::vector<double>{0, 1, 2}}) {
        const DistanceMonoid m = accepted(values);
        for (int x = 0; x < m.size(); ++x) CHECK(m.add(m.twice(x), m.twice(x)) == m.twice(x));
    }
}

TEST_CASE("idempotents, rank and chain for {0,1,3,4}") {
    const DistanceMonoid m = accepted({0, 1, 3, 4});
    CHECK(labels_at(m, idempotents(m)) == std::vector<std::string>{"0", "1", "4"});
    CHECK(su_rank(m) == 2);
    CHECK(labels_at(m, coordinatization_chain(m)) == std::vector<std::string>{"1", "0"});
}

TEST_CASE("idempotents, rank and chain for {0,1,2}") {
    const DistanceMonoid m = accepted({0, 1, 2});
    CHECK(labels_at(m, idempotents(m)) == std::vector<std::string>{"0", "2"});
    CHECK(su_rank(m) == 1);
    CHECK(labels_at(m, coordinatization_chain(m)) == std::vector<std::string>{"0"});
}

TEST_CASE("the one-element monoid has rank 0 and an empty chain") {
    const DistanceMonoid m = accepted({0});
    CHECK(su_rank(m) == 0);
    CHECK(coordinatization_chain(m).empty());
}

TEST_CASE("definable equivalence relations sit at the idempotents, coarsest first") {
    const DistanceMonoid m = accepted({0, 1, 3, 4});
    std::vector<std::string> names;
    for (const auto& d : definable_equivalences(m)) names.push_back(d.name);
    CHECK(names == std::vector<std::string>{"d_4", "d_1", "d_0"});
}

TEST_CASE("a corrupted table is reported") {
    DistanceMonoid m = accepted({0, 1, 3, 4});
    m.plus[1][2] = 0;
    CHECK_FALSE(check_monoid(m).empty());
}

TEST_CASE("monoid json round trip is byte identical") {
    const DistanceMonoid m = accepted({0, 1, 3, 4});
    const std::string once = monoid_to_json(m);
    const DistanceMonoid back = monoid_from_json(once);
    CHECK(monoid_to_json(back) == once);
    CHECK(back.labels == m.labels);
    CHECK(back.plus == m.plus);
}

TEST_CASE("format_value drops trailing zeros") {
    CHECK(format_value(1.0) == "1");
    CHECK(format_value(0.5) == "0.5");
}
