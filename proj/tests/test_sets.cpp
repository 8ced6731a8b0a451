#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqid/sets.hpp"

using namespace sqid;

TEST_CASE("construction canonicalizes and validates") {
    ElementSet s(3, {5, 1, 5, 0, 3});
    CHECK(s.members == std::vector<Elem>{0, 1, 3, 5});
    CHECK(s.size() == 4);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK_THROWS_AS(ElementSet(2, {4}), DimensionError);
    CHECK_THROWS_AS(ElementSet(0, {}), DimensionError);
}

TEST_CASE("full group") {
    ElementSet g = full_group(3);
    CHECK(g.size() == 8);
    CHECK(g.members.front() == 0);
    CHECK(g.members.back() == 7);
    CHECK_THROWS_AS(full_group(27), BoundExceeded);
}

TEST_CASE("sumset, difference, union") {
    ElementSet a(3, {1, 2});
    ElementSet b(3, {0, 4});
    CHECK(sumset(a, b).members == std::vector<Elem>{1, 2, 5, 6});
    CHECK(set_difference(full_group(3), a).members == std::vector<Elem>{0, 3, 4, 5, 6, 7});
    CHECK(set_union(a, b).members == std::vector<Elem>{0, 1, 2, 4});
    CHECK_THROWS_AS(sumset(a, ElementSet(4, {1})), DimensionError);
}

TEST_CASE("self sums drop zero and collapse duplicates") {
    ElementSet a(4, {0, 1, 2, 3});
    // pairwise xors: 1,2,3,3,2,1
    CHECK(self_sums(a).members == std::vector<Elem>{1, 2, 3});
    CHECK(self_sums(ElementSet(4, {9})).size() == 0);
}

TEST_CASE("sumset of a subgroup with itself is the subgroup") {
    ElementSet v(4, {0, 3, 5, 6});
    CHECK(sumset(v, v) == v);
}
