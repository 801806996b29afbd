#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "dimer/dimer_core.hpp"
#include "dimer/lattice.hpp"

namespace dimer {

struct PerfectMatching {
  std::vector<int> arrows;  // sorted

  bool contains(int a) const;
  auto operator<=>(const PerfectMatching&) const = default;
};

struct HomologyBasis {
  WeakPath x_path;
  WeakPath y_path;
  WeakPath z_cycle;
};

struct MatchingPoint {
  PerfectMatching matching;
  std::array<long, 3> point{0, 0, 1};

  Point2 xy() const { return {point[0], point[1]}; }
};

struct LatticePoint {
  Point2 p;
  int multiplicity = 0;
  Location location = Location::Interior;
  bool hull_vertex = false;
};

struct Polygon {
  std::vector<Point2> hull;           // counterclockwise
  std::vector<LatticePoint> points;   // sorted by coordinates

  long area2() const { return polygon_area2(hull); }
  std::vector<Point2> interior() const;
  std::vector<Point2> boundary_nonvertex() const;
};

struct MatchingPoints {
  std::vector<MatchingPoint> points;  // parallel to the input matchings
  Polygon polygon;
  Point2 shift;                       // added to raw degrees by the normalization
};

std::vector<PerfectMatching> enumerate_perfect_matchings(const DimerModel& model);

long weak_path_degree(const PerfectMatching& pm, const WeakPath& p);

HomologyBasis homology_basis(const DimerModel& model);

// Points are translated so that the lexicographically smallest hull vertex
// sits at `anchor`, or so that the componentwise minimum is the origin.
MatchingPoints matching_points_and_polygon(const DimerModel& model, const std::vector<PerfectMatching>& matchings,
                                           const HomologyBasis& basis, std::optional<Point2> anchor = std::nullopt);

}  // namespace dimer
