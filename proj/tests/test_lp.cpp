#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mfmut/lp.hpp"
#include "oracles.hpp"

using namespace mfmut;

TEST_CASE("small LP with a known optimum") {
  // min −x − y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6.
  RatMatrix a{{1, 2, 1, 0}, {3, 1, 0, 1}};
  RatVec b{4, 6};
  RatVec c{-1, -1, 0, 0};
  auto r = lp_minimize(a, b, c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rat(-14, 5));
  CHECK(r.x[0] == Rat(8, 5));
  CHECK(r.x[1] == Rat(6, 5));
}

TEST_CASE("infeasible and unbounded programs") {
  CHECK(lp_minimize(RatMatrix{{1, 1}}, RatVec{-1}, RatVec{0, 0}).status == LpStatus::Infeasible);
  CHECK(lp_minimize(RatMatrix{{1, -1}}, RatVec{0}, RatVec{-1, 0}).status == LpStatus::Unbounded);
  CHECK_FALSE(lp_feasible(RatMatrix{{1, 0}, {1, 0}}, RatVec{1, 2}));
}

TEST_CASE("redundant equality rows are tolerated") {
  RatMatrix a{{1, 1, 1}, {2, 2, 2}, {1, 0, 0}};
  RatVec b{1, 2, Rat(1, 3)};
  auto r = lp_minimize(a, b, RatVec{0, 1, 0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == 0);
  CHECK(r.x[0] == Rat(1, 3));
}

TEST_CASE("degenerate cycling example terminates under Bland's rule") {
  // Beale's example in equality form.
  RatMatrix a{{Rat(1, 4), -8, -1, 9, 1, 0, 0}, {Rat(1, 2), -12, Rat(-1, 2), 3, 0, 1, 0}, {0, 0, 1, 0, 0, 0, 1}};
  RatVec b{0, 0, 1};
  RatVec c{Rat(-3, 4), 20, Rat(-1, 2), 6, 0, 0, 0};
  auto r = lp_minimize(a, b, c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rat(-5, 4));
}

TEST_CASE("feasibility matches convex-hull membership by Caratheodory") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + rng() % 3, count = 1 + rng() % 5;
    std::vector<oracle::QVec> pts(count, oracle::QVec(dim));
    for (auto& p : pts)
      for (auto& x : p) x = d(rng);
    oracle::QVec q(dim);
    for (auto& x : q) x = Rat(d(rng), 1 + static_cast<int>(rng() % 2));
    RatMatrix a(dim + 1, RatVec(count));
    RatVec b(dim + 1);
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t i = 0; i < dim; ++i) a[i][j] = pts[j][i];
      a[dim][j] = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = q[i];
    b[dim] = 1;
    CHECK(lp_feasible(a, b) == oracle::caratheodory_contains(q, pts));
  }
}
