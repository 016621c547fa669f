#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "homoglab/structure.hpp"

using namespace homoglab;

namespace {

FinStructure cycle(int n) {
    FinStructure g(make_signature({{"adj", 2}}), n);
    for (int i = 0; i < n; ++i) g.add_symmetric(0, i, (i + 1) % n);
    g.canonicalize();
    return g;
}

}  // namespace

TEST_CASE("signature sorts relations and rejects duplicates") {
    const Signature sig = make_signature({{"Q", 2}, {"P", 2}, {"F", 1}});
    REQUIRE(sig.count() == 3);
    CHECK(sig.relations[0].name == "F");
    CHECK(sig.relations[1].name == "P");
    CHECK(sig.relations[2].name == "Q");
    CHECK(sig.index_of("P") == 1);
    CHECK(sig.arity(0) == 1);
    CHECK_THROWS_AS(make_signature({{"P", 2}, {"P", 2}}), std::invalid_argument);
}

TEST_CASE("add and holds agree for unary and binary tuples") {
    FinStructure s(make_signature({{"F", 1}, {"adj", 2}}), 4);
    s.add(0, 2);
    s.add(1, 0, 1);
    s.add_symmetric(1, 1, 3);
    s.canonicalize();
    CHECK(s.holds(0, 2));
    CHECK_FALSE(s.holds(0, 0));
    CHECK(s.holds(1, 0, 1));
    CHECK_FALSE(s.holds(1, 1, 0));
    CHECK(s.holds(1, 1, 3));
    CHECK(s.holds(1, 3, 1));
    CHECK_THROWS_AS(s.add(1, 0, 4), std::out_of_range);
}

TEST_CASE("tuples come back sorted and deduplicated") {
    FinStructure s(make_signature({{"adj", 2}}), 3);
    s.add(0, 2, 1);
    s.add(0, 0, 1);
    s.add(0, 2, 1);
    s.canonicalize();
    const auto& t = s.tuples(0);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::vector<int>{0, 1});
    CHECK(t[1] == std::vector<int>{2, 1});
}

TEST_CASE("induced substructure renumbers along the element list") {
    const FinStructure g = cycle(5);
    const FinStructure h = g.induced({1, 2, 4});
    REQUIRE(h.size() == 3);
    CHECK(h.holds(0, 0, 1));   // 1-2 edge survives
    CHECK_FALSE(h.holds(0, 0, 2));  // 1-4 was no edge
    CHECK(h.holds(0, 2, 0) == false);
    CHECK(h.holds(0, 1, 2) == false);  // 2-4 no edge
    const FinStructure k = g.induced({4, 0});
    CHECK(k.holds(0, 0, 1));  // 4-0 edge survives under reordering
}

TEST_CASE("equality is structural") {
    FinStructure a = cycle(4);
    FinStructure b = cycle(4);
    CHECK(a == b);
    b.add(0, 0, 2);
    b.canonicalize();
    CHECK_FALSE(a == b);
}

TEST_CASE("json round trip is byte identical") {
    const FinStructure g = cycle(6);
    const std::string once = structure_to_json(g);
    const FinStructure back = structure_from_json(once);
    CHECK(back == g);
    CHECK(structure_to_json(back) == once);
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS(structure_from_json("{"));
    CHECK_THROWS(structure_from_json("{\"size\": 2}"));
}

TEST_CASE("file round trip through save and load") {
    const auto path =
        (std::filesystem::temp_directory_path() / "homoglab_structure_rt.json").string();
    const FinStructure g = cycle(7);
    save_structure(g, path);
    CHECK(load_structure(path) == g);
    CHECK(read_text_file(path) == structure_to_json(g));
    std::filesystem::remove(path);
}
