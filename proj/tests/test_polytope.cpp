#include <doctest.h>

#include <random>

#include "mlfb/polytope.hpp"
#include "oracles.hpp"

using namespace mlfb;

TEST_CASE("lattice points of a triangle") {
  // x >= 0, y >= 0, x + y <= 3
  IntMat g{{-1, 0}, {0, -1}, {1, 1}};
  Budget budget(1000);
  auto pts = lattice_points(g, IntVec{0, 0, 3}, budget);
  CHECK(pts.size() == 10);
  CHECK(find_lattice_point(g, IntVec{0, 0, -1}, budget) == std::nullopt);
}

TEST_CASE("lattice points match box enumeration on random simplices") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> rhs(-4, 12);
  for (const IntMat& a : {IntMat{{-1, 2}, {1, -3}, {2, -1}}, IntMat{{1, 0}, {3, 17}, {-3, -13}},
                          IntMat{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 2, 3}}}) {
    for (int trial = 0; trial < 40; ++trial) {
      IntVec h(a.rows());
      for (auto& x : h) x = rhs(rng);
      Budget budget(kDefaultBudget);
      auto got = lattice_points(a, h, budget);
      auto want = oracle::points(a, h);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("facet slices with an equality pair") {
  // 2x - y <= 5 and -(2x - y) <= -5 pins the line 2x - y = 5.
  IntMat g{{-1, 2}, {1, -3}, {2, -1}, {-2, 1}};
  Budget budget(1000);
  auto pts = lattice_points(g, IntVec{-1, 0, 5, -5}, budget);
  for (const auto& p : pts) CHECK(2 * p[0] - p[1] == 5);
  CHECK(!pts.empty());
}

TEST_CASE("budget and unbounded regions") {
  IntMat g{{-1, 0}, {0, -1}, {1, 1}};
  Budget tiny(3);
  CHECK_THROWS_AS(lattice_points(g, IntVec{0, 0, 50}, tiny), Error);
  try {
    Budget again(3);
    lattice_points(g, IntVec{0, 0, 50}, again);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  Budget budget(1000);
  CHECK_THROWS_AS(lattice_points(IntMat{{1, 0}, {0, 1}}, IntVec{0, 0}, budget), Error);
}

TEST_CASE("early stop from the visitor") {
  IntMat g{{-1, 0}, {0, -1}, {1, 1}};
  Budget budget(1000);
  int seen = 0;
  bool finished = for_each_lattice_point(g, IntVec{0, 0, 3}, budget, [&](const IntVec&) { return ++seen < 4; });
  CHECK_FALSE(finished);
  CHECK(seen == 4);
}
