#include <doctest.h>

#include <random>

#include "dimer/rational_lp.hpp"

using namespace dimer;

namespace {

// Best objective over the vertices cut out by pairs of tight constraints in the plane.
Rational brute_force_2d(const LinearProgram& lp) {
  std::vector<std::vector<Rational>> rows = lp.A;
  std::vector<Rational> rhs = lp.b;
  rows.push_back({-1, 0});
  rhs.push_back(0);
  rows.push_back({0, -1});
  rhs.push_back(0);
  Rational best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Rational det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (det == 0) continue;
      const Rational x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
      const Rational y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
      bool feasible = x >= 0 && y >= 0;
      for (std::size_t k = 0; k < lp.A.size(); ++k) feasible = feasible && lp.A[k][0] * x + lp.A[k][1] * y <= lp.b[k];
      if (feasible) best = std::max(best, Rational(lp.c[0] * x + lp.c[1] * y));
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("rational_lp") {

TEST_CASE("textbook program") {
  LinearProgram lp;
  lp.A = {{1, 1}, {1, 3}, {2, 1}};
  lp.b = {4, 6, 6};
  lp.c = {3, 2};
  const auto r = maximize(lp);
  CHECK_FALSE(r.unbounded);
  CHECK(r.value == Rational(48, 5));
  CHECK(r.x[0] == Rational(12, 5));
  CHECK(r.x[1] == Rational(6, 5));
}

TEST_CASE("fractional optimum stays exact") {
  LinearProgram lp;
  lp.A = {{3, 1}, {1, 3}};
  lp.b = {1, 1};
  lp.c = {1, 1};
  CHECK(maximize(lp).value == Rational(1, 2));
}

TEST_CASE("unbounded program") {
  LinearProgram lp;
  lp.A = {{1, -1}};
  lp.b = {1};
  lp.c = {0, 1};
  CHECK(maximize(lp).unbounded);
}

TEST_CASE("degenerate program terminates") {
  LinearProgram lp;
  lp.A = {{1, -1, 0}, {-1, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  lp.b = {0, 0, 1, 2};
  lp.c = {1, 1, 1};
  CHECK(maximize(lp).value == 2);
}

TEST_CASE("agrees with vertex enumeration") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 5), rhs(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp;
    for (int k = 0; k < 4; ++k) {
      lp.A.push_back({coef(rng), coef(rng)});
      lp.b.push_back(rhs(rng));
    }
    // Box the region so the optimum is finite.
    lp.A.push_back({1, 0});
    lp.b.push_back(10);
    lp.A.push_back({0, 1});
    lp.b.push_back(10);
    lp.c = {coef(rng), coef(rng)};
    const auto r = maximize(lp);
    REQUIRE_FALSE(r.unbounded);
    CHECK(r.value == brute_force_2d(lp));
  }
}

}
