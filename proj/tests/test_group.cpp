#include <doctest.h>

#include "vilenkin/group.hpp"

using namespace vilenkin;

TEST_CASE("base sizes follow the radix recursion") {
  CHECK(base_sizes(GroupSpec({2, 2, 2, 2})).M == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  CHECK(base_sizes(GroupSpec({2, 3, 2})).M == std::vector<std::uint64_t>{1, 2, 6, 12});
  CHECK(base_sizes(GroupSpec({5})).M == std::vector<std::uint64_t>{1, 5});
}

TEST_CASE("base size overflow is an explicit failure") {
  CHECK_THROWS_AS(base_sizes(GroupSpec::walsh(70)), std::overflow_error);
  auto big = base_sizes_big(GroupSpec::walsh(70), 70);
  CHECK(big[70].log2() == doctest::Approx(70.0));
}

TEST_CASE("digit decomposition round-trips") {
  GroupSpec g({2, 3, 2});
  Idx i = digits_of(7, g);
  CHECK(i.digits == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(digits_of(0, g).digits == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(digits_of(5, GroupSpec({2, 2, 2})).digits == std::vector<std::uint32_t>{1, 0, 1});
  CHECK_THROWS_AS(digits_of(12, g), std::out_of_range);
  for (std::uint64_t n = 0; n < 12; ++n) CHECK(value_of_digits(digits_of(n, g).digits, g) == n);
}

TEST_CASE("digit round-trip holds on every group up to 1000 cells") {
  for (const auto& g : {GroupSpec({2, 3, 5, 7}), GroupSpec({4, 4, 4, 4}), GroupSpec({3, 3, 3, 3, 3, 3})}) {
    const std::uint64_t M = base_sizes(g).total();
    REQUIRE(M <= 1000);
    for (std::uint64_t n = 0; n < M; ++n)
      CHECK(value_of_digits(digits_of(n, g).digits, g) == n);
  }
}

TEST_CASE("cylinders: measure, nesting, partition") {
  GroupSpec g({2, 3, 2});
  Point x{{1, 2, 0}};
  CHECK(cylinder_of(x, 0, g).rank == 0);
  CHECK(cylinder_measure(cylinder_of(x, 0, g), g) == Rational(1, 1));
  CHECK(cylinder_measure(cylinder_of(x, 2, g), g) == Rational(1, 6));
  CHECK(cylinder_measure(cylinder_of(x, 3, g), g) == Rational(1, 12));
  CHECK_THROWS_AS(cylinder_of(x, 4, g), std::out_of_range);

  // rank-1 cylinder contains exactly the points sharing the first digit
  GroupSpec g23({2, 3});
  Cylinder c = cylinder_of(Point{{1, 2}}, 1, g23);
  CHECK(cylinder_measure(c, g23) == Rational(1, 2));
  CHECK(cylinder_contains(c, Point{{1, 0}}));
  CHECK(!cylinder_contains(c, Point{{0, 2}}));

  // partition: rank-n measures sum to one, exactly
  const CellLayout layout = cell_layout(g);
  for (std::size_t rank = 0; rank <= g.depth(); ++rank) {
    Rational total(0, 1);
    const std::uint64_t count = layout.bases.M[rank];
    for (std::uint64_t b = 0; b < count; ++b) total = total + Rational(1, static_cast<std::int64_t>(count));
    CHECK(total == Rational(1, 1));
  }

  // nesting: deeper cylinders refine shallower ones
  for (std::uint64_t cidx = 0; cidx < layout.size(); ++cidx) {
    Point p = point_of_cell(cidx, g, layout);
    for (std::size_t rank = 0; rank < g.depth(); ++rank) {
      CHECK(cylinder_contains(cylinder_of(p, rank, g), p));
    }
  }
}

TEST_CASE("group law: identity, inverse, associativity, commutativity") {
  GroupSpec g({3});
  CHECK(group_add(Point{{2}}, Point{{2}}, g).digits == std::vector<std::uint32_t>{1});

  GroupSpec h({2, 3, 2});
  const CellLayout layout = cell_layout(h);
  const std::uint64_t M = layout.size();
  REQUIRE(M <= 1000);
  for (std::uint64_t a = 0; a < M; ++a) {
    Point pa = point_of_cell(a, h, layout);
    CHECK(cell_of_point(group_add(pa, zero_point(h), h), layout) == a);
    Point na = group_neg(pa, h);
    CHECK(cell_of_point(group_add(pa, na, h), layout) == 0);
    for (std::uint64_t b = 0; b < M; ++b) {
      Point pb = point_of_cell(b, h, layout);
      CHECK(cell_of_point(group_add(pa, pb, h), layout) ==
            cell_of_point(group_add(pb, pa, h), layout));
      for (std::uint64_t c = 0; c < M; c += 5) {
        Point pc = point_of_cell(c, h, layout);
        CHECK(cell_of_point(group_add(group_add(pa, pb, h), pc, h), layout) ==
              cell_of_point(group_add(pa, group_add(pb, pc, h), h), layout));
      }
    }
  }
}

TEST_CASE("group spec parsing") {
  CHECK(GroupSpec::parse("walsh(8)") == GroupSpec::walsh(8));
  CHECK(GroupSpec::parse("radices=[2,3,2,2], depth = 4") == GroupSpec({2, 3, 2, 2}));
  CHECK(GroupSpec::parse("radices=[2,3]") == GroupSpec({2, 3}));
  CHECK(GroupSpec::parse("radices=[2,3],depth=4") == GroupSpec({2, 3, 2, 3}));
  CHECK(GroupSpec::parse(GroupSpec({5, 5, 5}).to_string()) == GroupSpec({5, 5, 5}));
  CHECK_THROWS(GroupSpec::parse("walsh(0)"));
  CHECK_THROWS(GroupSpec::parse("radices=[1,2]"));
  CHECK_THROWS(GroupSpec::parse("nonsense"));
}
