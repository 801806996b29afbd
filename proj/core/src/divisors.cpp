#include "dimer/divisors.hpp"

#include <algorithm>
#include <deque>

namespace dimer {

TorusDivisor TorusDivisor::prime(int num_rays, int rho) {
  TorusDivisor d(num_rays);
  d.coeffs.at(rho) = 1;
  return d;
}

bool TorusDivisor::effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; });
}

bool TorusDivisor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
}

std::vector<int> TorusDivisor::support() const {
  std::vector<int> out;
  for (int r = 0; r < static_cast<int>(coeffs.size()); ++r)
    if (coeffs[r] != 0) out.push_back(r);
  return out;
}

namespace {

template <typename Op>
TorusDivisor combine(const TorusDivisor& a, const TorusDivisor& b, Op op) {
  if (a.coeffs.size() != b.coeffs.size()) throw Error(ErrorKind::CrossCheck, "divisors over different fans");
  TorusDivisor r(static_cast<int>(a.coeffs.size()));
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] = op(a.coeffs[k], b.coeffs[k]);
  return r;
}

}  // namespace

TorusDivisor operator+(const TorusDivisor& a, const TorusDivisor& b) {
  return combine(a, b, [](long x, long y) { return x + y; });
}

TorusDivisor operator-(const TorusDivisor& a, const TorusDivisor& b) {
  return combine(a, b, [](long x, long y) { return x - y; });
}

TorusDivisor operator-(const TorusDivisor& a) {
  TorusDivisor r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

TorusDivisor lcm(const std::vector<TorusDivisor>& ds) {
  if (ds.empty()) throw Error(ErrorKind::CrossCheck, "lcm of an empty list");
  TorusDivisor r = ds.front();
  for (const auto& d : ds) r = combine(r, d, [](long x, long y) { return std::max(x, y); });
  return r;
}

TorusDivisor gcd(const std::vector<TorusDivisor>& ds) {
  if (ds.empty()) throw Error(ErrorKind::CrossCheck, "gcd of an empty list");
  TorusDivisor r = ds.front();
  for (const auto& d : ds) r = combine(r, d, [](long x, long y) { return std::min(x, y); });
  return r;
}

TorusDivisor difference(const TorusDivisor& a, const TorusDivisor& b) {
  TorusDivisor r = a - b;
  if (!r.effective()) throw Error(ErrorKind::CrossCheck, "divisor difference " + to_string(a) + " - " + to_string(b) + " is not effective");
  return r;
}

bool contains(int rho, const TorusDivisor& d) { return d.coeffs.at(rho) >= 1; }

std::string to_string(const TorusDivisor& d) {
  std::string s;
  for (int r = 0; r < static_cast<int>(d.coeffs.size()); ++r) {
    const long c = d.coeffs[r];
    if (c == 0) continue;
    if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
    if (std::labs(c) != 1) s += std::to_string(std::labs(c));
    s += "E" + std::to_string(r + 1);
  }
  return s.empty() ? "0" : s;
}

TorusDivisor arrow_label(const DimerModel& model, const Fan& fan, int a) {
  if (a < 0 || a >= model.num_arrows()) throw Error(ErrorKind::Input, "unknown arrow " + std::to_string(a));
  TorusDivisor d(fan.num_rays());
  for (int r = 0; r < fan.num_rays(); ++r) d.coeffs[r] = fan.rays[r].matching.contains(a) ? 1 : 0;
  return d;
}

std::vector<TorusDivisor> arrow_labels(const DimerModel& model, const Fan& fan) {
  std::vector<TorusDivisor> out;
  for (int a = 0; a < model.num_arrows(); ++a) out.push_back(arrow_label(model, fan, a));
  return out;
}

TorusDivisor path_label(const DimerModel& model, const Fan& fan, const WeakPath& p) {
  TorusDivisor d(fan.num_rays());
  for (const auto& s : p.steps) {
    const auto l = arrow_label(model, fan, s.arrow);
    d = s.exponent > 0 ? d + l : d - l;
  }
  return d;
}

namespace {

std::vector<std::vector<std::int64_t>> principal_rows(const Fan& fan) {
  std::vector<std::vector<std::int64_t>> rows(3);
  for (const auto& r : fan.rays)
    for (int k = 0; k < 3; ++k) rows[k].push_back(r.point[k]);
  return rows;
}

}  // namespace

PrincipalLattice::PrincipalLattice(const Fan& fan) : lattice_(principal_rows(fan)) {}

bool PrincipalLattice::contains(const TorusDivisor& d) const {
  return lattice_.contains(std::vector<std::int64_t>(d.coeffs.begin(), d.coeffs.end()));
}

bool same_class(const PrincipalLattice& principal, const LineBundleClass& a, const LineBundleClass& b) {
  return principal.contains(a.representative - b.representative);
}

WeakPath weak_path_to(const DimerModel& model, int i) {
  if (i < 0 || i >= model.num_vertices) throw Error(ErrorKind::Input, "unknown vertex " + std::to_string(i));
  std::vector<int> seen(model.num_vertices, 0);
  std::vector<WeakStep> via(model.num_vertices);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& a : model.arrows) {
      for (int e : {1, -1}) {
        const int from = e > 0 ? a.tail : a.head;
        const int to = e > 0 ? a.head : a.tail;
        if (from != v || seen[to]) continue;
        seen[to] = 1;
        via[to] = {a.id, e};
        queue.push_back(to);
      }
    }
  }
  if (!seen[i]) throw Error(ErrorKind::Validation, "vertex " + std::to_string(i) + " is not connected to 0");
  WeakPath p;
  for (int v = i; v != 0;) {
    p.steps.push_back(via[v]);
    const auto& a = model.arrows[via[v].arrow];
    v = via[v].exponent > 0 ? a.tail : a.head;
  }
  std::reverse(p.steps.begin(), p.steps.end());
  return p;
}

LineBundleClass line_bundle_class(const DimerModel& model, const Fan& fan, int i) {
  return {path_label(model, fan, weak_path_to(model, i))};
}

std::vector<Cone> common_zero_support(const Fan& fan, const std::vector<TorusDivisor>& divisors) {
  for (const auto& d : divisors)
    if (!d.effective()) throw Error(ErrorKind::CrossCheck, "common zero locus of a non-effective divisor");
  std::vector<Cone> hit;
  for (const auto& c : fan.cones()) {
    const bool all = std::all_of(divisors.begin(), divisors.end(), [&](const TorusDivisor& d) {
      return std::any_of(c.begin(), c.end(), [&](int r) { return d.coeffs[r] > 0; });
    });
    if (all) hit.push_back(c);
  }
  std::vector<Cone> minimal;
  for (const auto& c : hit) {
    const bool has_smaller = std::any_of(hit.begin(), hit.end(), [&](const Cone& d) {
      return d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
    if (!has_smaller) minimal.push_back(c);
  }
  return minimal;
}

CurveData curve_intersection_data(const Fan& fan, Edge edge) {
  if (edge[0] > edge[1]) std::swap(edge[0], edge[1]);
  const auto tris = fan.triangles_with_edge(edge);
  if (tris.size() != 2 || !fan.is_compact_edge(edge))
    throw Error(ErrorKind::Input, "edge (" + std::to_string(edge[0] + 1) + "," + std::to_string(edge[1] + 1) +
                                      ") is not an interior edge");
  CurveData cd;
  cd.edge = edge;
  for (int k = 0; k < 2; ++k)
    for (int r : fan.triangles[tris[k]])
      if (r != edge[0] && r != edge[1]) cd.opposite[k] = r;

  // u1 + u2 = c1 v1 + c2 v2 at height one, so c1 + c2 = 2 and
  // c1 (v1 - v2) = u1 + u2 - 2 v2.
  const Point2 v1 = fan.rays[edge[0]].xy(), v2 = fan.rays[edge[1]].xy();
  const Point2 u1 = fan.rays[cd.opposite[0]].xy(), u2 = fan.rays[cd.opposite[1]].xy();
  const Point2 dir = v1 - v2;
  const Point2 rhs{u1.x + u2.x - 2 * v2.x, u1.y + u2.y - 2 * v2.y};
  long c1 = 0;
  if (dir.x != 0) {
    c1 = rhs.x / dir.x;
  } else {
    c1 = rhs.y / dir.y;
  }
  if (c1 * dir.x != rhs.x || c1 * dir.y != rhs.y)
    throw Error(ErrorKind::CrossCheck, "wall relation for an interior edge has no integral solution");
  const long c2 = 2 - c1;

  cd.intersection.assign(fan.num_rays(), 0);
  cd.intersection[cd.opposite[0]] = 1;
  cd.intersection[cd.opposite[1]] = 1;
  cd.intersection[edge[0]] = -c1;
  cd.intersection[edge[1]] = -c2;
  return cd;
}

long bundle_degree_on_curve(const LineBundleClass& cls, const CurveData& curve) {
  long deg = 0;
  for (std::size_t r = 0; r < curve.intersection.size(); ++r) deg += cls.representative.coeffs.at(r) * curve.intersection[r];
  return deg;
}

bool is_minus1_minus1(const Fan& fan, const CurveData& curve) {
  const Point2 s1 = fan.rays[curve.opposite[0]].xy() + fan.rays[curve.opposite[1]].xy();
  const Point2 s2 = fan.rays[curve.edge[0]].xy() + fan.rays[curve.edge[1]].xy();
  return s1 == s2;
}

}  // namespace dimer
