#include "doctest.h"
#include "tropmod/lattice.hpp"
#include "tropmod/rational.hpp"

using namespace tropmod;

TEST_SUITE_BEGIN("rational and lattice");

TEST_CASE("rational arithmetic is exact and normalized") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(3, 4) < Rat(4, 5));
  CHECK(Rat(-1, 2).abs() == Rat(1, 2));
  CHECK(Rat(7, 2).str() == "7/2");
  CHECK(Rat(-3).str() == "-3");
}

TEST_CASE("primitive vector") {
  CHECK(primitive(IntVec{2, 2, 0}) == IntVec{1, 1, 0});
  CHECK(primitive(IntVec{0, 0, 1}) == IntVec{0, 0, 1});
  CHECK(primitive(IntVec{-3, -3, -3}) == IntVec{-1, -1, -1});
  CHECK_THROWS_AS(primitive(IntVec{0, 0, 0}), Error);
  CHECK(primitive(RatVec{Rat(1, 2), Rat(3, 2)}) == IntVec{1, 3});
}

TEST_CASE("rank and span") {
  std::vector<IntVec> rows{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(rank(rows) == 2);
  CHECK(in_span(to_rat(IntVec{3, -2, 0}), rows));
  CHECK_FALSE(in_span(to_rat(IntVec{0, 0, 1}), rows));
  CHECK(in_span(RatVec{Rat(0), Rat(0), Rat(0)}, rows));
}

TEST_CASE("solve_columns") {
  std::vector<IntVec> cols{{1, 0, 1}, {0, 1, 1}};
  auto sol = solve_columns(cols, RatVec{Rat(2), Rat(3), Rat(5)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(2));
  CHECK((*sol)[1] == Rat(3));
  CHECK_FALSE(solve_columns(cols, RatVec{Rat(2), Rat(3), Rat(4)}).has_value());
}

TEST_CASE("kernels and saturation") {
  auto ker = rational_kernel({{1, 1, 1}}, 3);
  CHECK(ker.size() == 2);
  for (const IntVec& k : ker) CHECK(k[0] + k[1] + k[2] == 0);

  auto iker = integer_kernel({{2, 4}}, 2);
  REQUIRE(iker.size() == 1);
  CHECK((iker[0] == IntVec{2, -1} || iker[0] == IntVec{-2, 1}));

  auto sat = saturation_basis({{2, 2, 0}}, 3);
  REQUIRE(sat.size() == 1);
  CHECK((sat[0] == IntVec{1, 1, 0} || sat[0] == IntVec{-1, -1, 0}));

  auto full = saturation_basis({{1, 0}, {0, 1}}, 2);
  CHECK(rank(full) == 2);

  // index-2 sublattice saturates to the full lattice
  auto diag = saturation_basis({{1, 1}, {1, -1}}, 2);
  CHECK(rank(diag) == 2);
  CHECK(in_span(to_rat(IntVec{1, 0}), diag));
}

TEST_CASE("cone membership") {
  std::vector<IntVec> quadrant{{1, 0}, {0, 1}};
  CHECK(in_cone(IntVec{2, 3}, quadrant));
  CHECK(in_cone(IntVec{0, 0}, quadrant));
  CHECK_FALSE(in_cone(IntVec{-1, 0}, quadrant));
  CHECK_FALSE(in_cone(IntVec{1, -1}, quadrant));
  std::vector<IntVec> redundant{{1, 0}, {0, 1}, {1, 1}};
  CHECK(in_cone(IntVec{5, 1}, redundant));
  CHECK(extreme_generators(redundant) == std::vector<int>{0, 1});
  CHECK(cone_pointed(quadrant));
  CHECK_FALSE(cone_pointed({{1, 0}, {-1, 0}}));
  CHECK_FALSE(cone_pointed({{1, 0}, {-1, 1}, {-1, -1}}));
}

TEST_CASE("cone intersection") {
  std::vector<IntVec> c1{{1, 0}, {0, 1}};
  std::vector<IntVec> c2{{0, 1}, {-1, 0}};
  auto rays = cone_intersection(c1, c2);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0] == IntVec{0, 1});

  // overlapping 2D cones: intersection spanned by (0,1) and (1,1)
  std::vector<IntVec> c3{{1, 1}, {-1, 1}};
  auto rays2 = cone_intersection(c1, c3);
  CHECK(in_cone(IntVec{0, 1}, rays2));
  CHECK(in_cone(IntVec{1, 1}, rays2));
  for (const IntVec& r : rays2) {
    CHECK(in_cone(r, c1));
    CHECK(in_cone(r, c3));
  }

  std::vector<IntVec> c4{{-1, -1}};
  CHECK(cone_intersection(c1, c4).empty());
}

TEST_SUITE_END();
