#include <doctest.h>

#include <map>

#include "dimer/matchings.hpp"
#include "oracles.hpp"

using namespace dimer;

TEST_SUITE("matchings") {

TEST_CASE("enumeration agrees with subset enumeration") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    CHECK(enumerate_perfect_matchings(model) == oracle::brute_force_matchings(model));
  }
}

TEST_CASE("matching counts") {
  CHECK(enumerate_perfect_matchings(oracle::fixture("one_vertex")).size() == 3);
  CHECK(enumerate_perfect_matchings(oracle::fixture("conifold")).size() == 4);
  CHECK(enumerate_perfect_matchings(oracle::fixture("hexagonal_z3")).size() == 6);
  CHECK(enumerate_perfect_matchings(oracle::fixture("hexagon_10")).size() == 60);
}

TEST_CASE("homology basis has the expected windings") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    const auto basis = homology_basis(model);
    CHECK(weak_path_end(model, basis.x_path, 0) == 0);
    CHECK(weak_path_end(model, basis.y_path, 0) == 0);
    CHECK(weak_path_end(model, basis.z_cycle, 0) == 0);
    CHECK(weak_path_winding(model, basis.x_path) == std::array<int, 2>{1, 0});
    CHECK(weak_path_winding(model, basis.y_path) == std::array<int, 2>{0, 1});
    CHECK(weak_path_winding(model, basis.z_cycle) == std::array<int, 2>{0, 0});
    for (const auto& pm : enumerate_perfect_matchings(model)) CHECK(weak_path_degree(pm, basis.z_cycle) == 1);
  }
}

TEST_CASE("degree is additive on concatenation") {
  const auto model = oracle::fixture("hexagon_10");
  const auto basis = homology_basis(model);
  for (const auto& pm : enumerate_perfect_matchings(model)) {
    const auto xy = concat(basis.x_path, basis.y_path);
    CHECK(weak_path_degree(pm, xy) == weak_path_degree(pm, basis.x_path) + weak_path_degree(pm, basis.y_path));
    CHECK(weak_path_degree(pm, inverse(basis.x_path)) == -weak_path_degree(pm, basis.x_path));
  }
}

TEST_CASE("ten-vertex hexagon: polygon") {
  const auto model = oracle::fixture("hexagon_10");
  const auto mps = matching_points_and_polygon(model, enumerate_perfect_matchings(model), homology_basis(model));
  const auto& poly = mps.polygon;
  CHECK(poly.hull == std::vector<Point2>{{3, 0}, {3, 1}, {1, 3}, {0, 3}, {0, 2}, {2, 0}});
  CHECK(poly.interior() == std::vector<Point2>{{1, 2}, {2, 1}});
  CHECK(poly.boundary_nonvertex() == std::vector<Point2>{{1, 1}, {2, 2}});
  CHECK(poly.area2() == 10);
  long total = 0;
  for (const auto& lp : poly.points) {
    CHECK(lp.multiplicity >= 1);
    total += lp.multiplicity;
  }
  CHECK(total == 60);
  CHECK(poly.points.size() == 10);
}

TEST_CASE("hull vertices carry exactly one matching") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    const auto mps = matching_points_and_polygon(model, enumerate_perfect_matchings(model), homology_basis(model));
    for (const auto& lp : mps.polygon.points)
      if (lp.hull_vertex) CHECK(lp.multiplicity == 1);
    CHECK(mps.polygon.area2() == model.num_vertices);
  }
}

TEST_CASE("translation normalization") {
  const auto model = oracle::fixture("conifold");
  const auto ms = enumerate_perfect_matchings(model);
  const auto basis = homology_basis(model);
  const auto plain = matching_points_and_polygon(model, ms, basis);
  Point2 lo = plain.polygon.hull.front();
  for (auto p : plain.polygon.hull) lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
  CHECK(lo == Point2{0, 0});
  const auto anchored = matching_points_and_polygon(model, ms, basis, Point2{5, -2});
  const auto smallest = *std::min_element(anchored.polygon.hull.begin(), anchored.polygon.hull.end());
  CHECK(smallest == Point2{5, -2});
}

}
