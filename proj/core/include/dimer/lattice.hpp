#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace dimer {

struct Point2 {
  long x = 0;
  long y = 0;
  auto operator<=>(const Point2&) const = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

// Twice the signed area of triangle (a, b, c).
inline long cross(Point2 a, Point2 b, Point2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// Strict hull vertices in counterclockwise order, starting from the vertex of
// minimal y (maximal x among ties).
std::vector<Point2> convex_hull(const std::vector<Point2>& points);

// Twice the area of a counterclockwise polygon.
long polygon_area2(const std::vector<Point2>& hull);

enum class Location { Outside, Boundary, Interior };
Location locate(const std::vector<Point2>& hull, Point2 p);

std::vector<Point2> lattice_points(const std::vector<Point2>& hull);

// Integer row lattice in Hermite normal form: rows are echelon with positive
// pivots and entries above each pivot reduced modulo it.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::vector<std::vector<std::int64_t>> generators);

  bool contains(std::vector<std::int64_t> v) const;
  const std::vector<std::vector<std::int64_t>>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<std::int64_t>> basis_;
  std::vector<std::size_t> pivots_;
};

std::vector<std::vector<std::int64_t>> hermite_normal_form(std::vector<std::vector<std::int64_t>> rows);

}  // namespace dimer
