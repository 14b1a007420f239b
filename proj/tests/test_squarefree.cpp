#include <doctest.h>

#include "fthresh/squarefree.hpp"

using namespace fthresh;

TEST_CASE("from_faces keeps the inclusion antichain") {
    // {x}, {x,y} -> {x} generates everything the pair does
    auto I = SquarefreeIdeal::from_faces(2, {0b01, 0b11});
    CHECK(I.faces == std::set<std::uint32_t>{0b01});
    CHECK_THROWS_AS(SquarefreeIdeal::from_faces(1, {0b10}), InvalidParameter);
    CHECK(SquarefreeIdeal::from_faces(2, {}).is_zero());
    CHECK(SquarefreeIdeal::from_faces(2, {0}).is_unit());
}

TEST_CASE("sum intersect colon on named ideals") {
    auto x = SquarefreeIdeal::from_faces(2, {0b01});
    auto y = SquarefreeIdeal::from_faces(2, {0b10});
    auto xy = SquarefreeIdeal::from_faces(2, {0b11});
    auto m = SquarefreeIdeal::from_faces(2, {0b01, 0b10});

    CHECK(sf_sum(x, y) == m);
    CHECK(sf_intersect(x, y) == xy);
    CHECK(sf_intersect(m, xy) == xy);
    CHECK(sf_colon(xy, x) == y);
    CHECK(sf_colon(x, x).is_unit());
    CHECK(sf_colon(x, SquarefreeIdeal::from_faces(2, {})).is_unit());
    // (xy) : m = (x) cap (y) = (xy)
    CHECK(sf_colon(xy, m) == xy);
}

TEST_CASE("all_squarefree_ideals counts") {
    CHECK(all_squarefree_ideals(1).size() == 2);  // (x) and the unit ideal
    CHECK(all_squarefree_ideals(2).size() == 5);
    CHECK(all_squarefree_ideals(3).size() == 19);
    CHECK_THROWS_AS(all_squarefree_ideals(5), InvalidParameter);
}

TEST_CASE("cu_closure reaches every nonzero squarefree ideal") {
    for (int n = 1; n <= 3; ++n) CHECK(cu_closure(n) == all_squarefree_ideals(n));
}
