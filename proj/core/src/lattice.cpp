#include "dimer/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_point.hpp>

namespace bg = boost::geometry;

namespace dimer {

namespace {

using BgPoint = bg::model::d2::point_xy<long>;
using BgPolygon = bg::model::polygon<BgPoint, false, true>;

BgPolygon to_polygon(const std::vector<Point2>& hull) {
  BgPolygon poly;
  for (const auto& p : hull) bg::append(poly.outer(), BgPoint(p.x, p.y));
  if (!hull.empty()) bg::append(poly.outer(), BgPoint(hull.front().x, hull.front().y));
  return poly;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<Point2> convex_hull(const std::vector<Point2>& points) {
  std::vector<Point2> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  bg::model::multi_point<BgPoint> mp;
  for (const auto& p : pts) bg::append(mp, BgPoint(p.x, p.y));
  BgPolygon hull_poly;
  bg::convex_hull(mp, hull_poly);

  std::vector<Point2> ring;
  for (const auto& q : hull_poly.outer()) ring.push_back({q.x(), q.y()});
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();

  // Drop collinear boundary points so only strict vertices remain.
  std::vector<Point2> hull;
  const std::size_t n = ring.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 prev = ring[(k + n - 1) % n], cur = ring[k], next = ring[(k + 1) % n];
    if (cross(prev, cur, next) != 0) hull.push_back(cur);
  }
  if (hull.size() < 3) return hull;
  if (polygon_area2(hull) < 0) std::reverse(hull.begin(), hull.end());

  auto start = std::min_element(hull.begin(), hull.end(), [](Point2 a, Point2 b) {
    return a.y != b.y ? a.y < b.y : a.x > b.x;
  });
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

long polygon_area2(const std::vector<Point2>& hull) {
  long s = 0;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Point2 a = hull[k], b = hull[(k + 1) % hull.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

Location locate(const std::vector<Point2>& hull, Point2 p) {
  if (hull.size() < 3) return Location::Outside;
  const auto poly = to_polygon(hull);
  const BgPoint q(p.x, p.y);
  if (bg::within(q, poly)) return Location::Interior;
  if (bg::covered_by(q, poly)) return Location::Boundary;
  return Location::Outside;
}

std::vector<Point2> lattice_points(const std::vector<Point2>& hull) {
  std::vector<Point2> out;
  if (hull.empty()) return out;
  long x0 = hull[0].x, x1 = hull[0].x, y0 = hull[0].y, y1 = hull[0].y;
  for (const auto& p : hull) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y)
      if (locate(hull, {x, y}) != Location::Outside) out.push_back({x, y});
  return out;
}

std::vector<std::vector<std::int64_t>> hermite_normal_form(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k][c] != 0 && (best == rows.size() || std::llabs(rows[k][c]) < std::llabs(rows[best][c]))) best = k;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t k = r + 1; k < rows.size(); ++k) {
        if (rows[k][c] == 0) continue;
        const std::int64_t q = floor_div(rows[k][c], rows[r][c]);
        for (std::size_t j = c; j < cols; ++j) rows[k][j] -= q * rows[r][j];
        if (rows[k][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t k = 0; k < r; ++k) {
      const std::int64_t q = floor_div(rows[k][c], rows[r][c]);
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntegerLattice::IntegerLattice(std::vector<std::vector<std::int64_t>> generators) {
  if (!generators.empty()) cols_ = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != cols_) throw std::invalid_argument("lattice generators of unequal length");
  basis_ = hermite_normal_form(std::move(generators));
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    pivots_.push_back(p);
  }
}

bool IntegerLattice::contains(std::vector<std::int64_t> v) const {
  if (v.size() != cols_) return false;
  std::size_t next = 0;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (; next < p; ++next)
      if (v[next] != 0) return false;
    if (v[p] % basis_[k][p] != 0) return false;
    const std::int64_t q = v[p] / basis_[k][p];
    for (std::size_t j = p; j < cols_; ++j) v[j] -= q * basis_[k][j];
    next = p + 1;
  }
  for (; next < cols_; ++next)
    if (v[next] != 0) return false;
  return true;
}

}  // namespace dimer
