#include "dimer/moduli_fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace dimer {

using boost::multiprecision::cpp_int;

StabilityParam special_theta(int num_vertices) {
  StabilityParam t;
  t.theta.assign(num_vertices, Rational(1));
  t.theta[0] = Rational(1 - num_vertices);
  return t;
}

StabilityParam operator-(const StabilityParam& t) {
  StabilityParam r = t;
  for (auto& v : r.theta) v = -v;
  return r;
}

bool is_special(const StabilityParam& t) {
  if (t.theta.empty()) return false;
  for (std::size_t i = 1; i < t.theta.size(); ++i)
    if (t.theta[i] <= 0) return false;
  return true;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::SemistableNotStable: return "semistable-not-stable";
    case Stability::Unstable: return "unstable";
    case Stability::RelationViolating: return "relation-violating";
  }
  return "?";
}

namespace {

// Positive integer multiple of theta; signs of theta(S) are unchanged.
std::vector<std::int64_t> integral(const StabilityParam& t, int n) {
  if (static_cast<int>(t.theta.size()) != n)
    throw Error(ErrorKind::Input, "stability parameter has " + std::to_string(t.theta.size()) + " entries, expected " +
                                      std::to_string(n));
  Rational sum = 0;
  cpp_int l = 1;
  for (const auto& v : t.theta) {
    sum += v;
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  }
  if (sum != 0) throw Error(ErrorKind::Input, "stability parameter does not sum to zero");
  std::vector<std::int64_t> out;
  const cpp_int limit = cpp_int(1) << 40;
  for (const auto& v : t.theta) {
    cpp_int x = boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v));
    if (abs(x) >= limit) throw Error(ErrorKind::Input, "stability parameter entries are too large");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

void check_size(const DimerModel& model) {
  if (model.num_vertices > kMaxVertices)
    throw Error(ErrorKind::Input, "models with more than " + std::to_string(kMaxVertices) + " vertices are not supported");
}

Stability classify(const DimerModel& model, const std::vector<char>& nonzero, const std::vector<std::int64_t>& theta) {
  if (!satisfies_relations(model, nonzero)) return Stability::RelationViolating;
  bool zero_seen = false;
  for (VertexSet s : closed_subsets(model, nonzero)) {
    std::int64_t w = 0;
    for (int v = 0; v < model.num_vertices; ++v)
      if (s >> v & 1) w += theta[v];
    if (w < 0) return Stability::Unstable;
    if (w == 0) zero_seen = true;
  }
  return zero_seen ? Stability::SemistableNotStable : Stability::Stable;
}

std::vector<char> nonzero_from_cosupport(const DimerModel& model, const std::vector<int>& cosupport) {
  std::vector<char> nz(model.num_arrows(), 1);
  for (int a : cosupport) nz.at(a) = 0;
  return nz;
}

bool on_hull_boundary(const std::vector<Point2>& hull, Point2 p, Point2 q) {
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Point2 a = hull[k], b = hull[(k + 1) % hull.size()];
    if (cross(a, b, p) == 0 && cross(a, b, q) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<VertexSet> closed_subsets(const DimerModel& model, const std::vector<char>& nonzero) {
  check_size(model);
  const int n = model.num_vertices;
  std::vector<VertexSet> succ(n, 0);
  for (const auto& a : model.arrows)
    if (nonzero[a.id]) succ[a.tail] |= VertexSet(1) << a.head;
  std::vector<VertexSet> out;
  const VertexSet full = (VertexSet(1) << n) - 1;
  for (VertexSet s = 1; s < full; ++s) {
    VertexSet reach = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) reach |= succ[v];
    if ((reach & ~s) == 0) out.push_back(s);
  }
  return out;
}

bool satisfies_relations(const DimerModel& model, const std::vector<char>& nonzero) {
  for (const auto& rel : f_term_relations(model)) {
    auto product = [&](const std::vector<int>& path) {
      return std::all_of(path.begin(), path.end(), [&](int a) { return nonzero[a] != 0; });
    };
    if (product(rel.plus_path) != product(rel.minus_path)) return false;
  }
  return true;
}

Stability is_stable_cosupport(const DimerModel& model, const std::vector<int>& cosupport, const StabilityParam& theta) {
  return classify(model, nonzero_from_cosupport(model, cosupport), integral(theta, model.num_vertices));
}

std::vector<PerfectMatching> stable_matchings(const DimerModel& model, const std::vector<PerfectMatching>& matchings,
                                              const StabilityParam& theta) {
  const auto t = integral(theta, model.num_vertices);
  std::vector<PerfectMatching> out;
  for (const auto& pm : matchings)
    if (classify(model, nonzero_from_cosupport(model, pm.arrows), t) == Stability::Stable) out.push_back(pm);
  return out;
}

std::vector<Cone> Fan::cones() const {
  std::set<Cone> all;
  all.insert(Cone{});
  for (const auto& t : triangles) {
    for (int mask = 1; mask < 8; ++mask) {
      Cone c;
      for (int k = 0; k < 3; ++k)
        if (mask >> k & 1) c.push_back(t[k]);
      all.insert(c);
    }
  }
  return {all.begin(), all.end()};
}

bool Fan::is_cone(const Cone& c) const {
  if (c.empty()) return true;
  for (const auto& t : triangles)
    if (std::all_of(c.begin(), c.end(), [&](int r) { return std::find(t.begin(), t.end(), r) != t.end(); }))
      return true;
  return false;
}

bool Fan::is_compact_ray(int r) const {
  return std::find(compact_rays.begin(), compact_rays.end(), r) != compact_rays.end();
}

bool Fan::is_compact_edge(Edge e) const {
  if (e[0] > e[1]) std::swap(e[0], e[1]);
  return std::find(compact_edges.begin(), compact_edges.end(), e) != compact_edges.end();
}

std::vector<int> Fan::triangles_with_edge(Edge e) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(triangles.size()); ++k) {
    const auto& t = triangles[k];
    if (std::find(t.begin(), t.end(), e[0]) != t.end() && std::find(t.begin(), t.end(), e[1]) != t.end())
      out.push_back(k);
  }
  return out;
}

Fan build_fan(const DimerModel& model, const std::vector<PerfectMatching>& matchings, const HomologyBasis& basis,
              const StabilityParam& theta, std::optional<Point2> anchor) {
  check_size(model);
  const auto t = integral(theta, model.num_vertices);
  const auto mp = matching_points_and_polygon(model, matchings, basis, anchor);

  std::map<Point2, MatchingPoint> by_point;
  for (const auto& p : mp.points) {
    const auto s = classify(model, nonzero_from_cosupport(model, p.matching.arrows), t);
    if (s == Stability::SemistableNotStable)
      throw Error(ErrorKind::NonGeneric, "non-generic stability parameter: a perfect matching is strictly semistable");
    if (s != Stability::Stable) continue;
    if (!by_point.emplace(p.xy(), p).second)
      throw Error(ErrorKind::Inconsistent, "two stable perfect matchings share the lattice point (" +
                                               std::to_string(p.point[0]) + "," + std::to_string(p.point[1]) + ")");
  }
  for (const auto& lp : mp.polygon.points)
    if (!by_point.count(lp.p))
      throw Error(ErrorKind::Inconsistent, "lattice point (" + std::to_string(lp.p.x) + "," + std::to_string(lp.p.y) +
                                               ") carries no stable perfect matching");

  Fan fan;
  fan.polygon = mp.polygon;
  for (const auto& v : fan.polygon.hull) fan.rays.push_back(by_point.at(v));
  for (const auto& [p, m] : by_point)
    if (std::find(fan.polygon.hull.begin(), fan.polygon.hull.end(), p) == fan.polygon.hull.end()) fan.rays.push_back(m);

  const int R = fan.num_rays();
  for (int i = 0; i < R; ++i)
    for (int j = i + 1; j < R; ++j)
      for (int k = j + 1; k < R; ++k) {
        if (cross(fan.rays[i].xy(), fan.rays[j].xy(), fan.rays[k].xy()) == 0) continue;
        std::vector<char> nz(model.num_arrows(), 1);
        for (int r : {i, j, k})
          for (int a : fan.rays[r].matching.arrows) nz[a] = 0;
        const auto s = classify(model, nz, t);
        if (s == Stability::SemistableNotStable)
          throw Error(ErrorKind::NonGeneric, "non-generic stability parameter: a torus-invariant module is strictly semistable");
        if (s == Stability::Stable) fan.triangles.push_back({i, j, k});
      }

  long area2 = 0;
  std::map<Edge, int> edge_count;
  for (const auto& tri : fan.triangles) {
    const long a2 = std::labs(cross(fan.rays[tri[0]].xy(), fan.rays[tri[1]].xy(), fan.rays[tri[2]].xy()));
    if (a2 != 1)
      throw Error(ErrorKind::NonGeneric, "non-generic stability parameter: triangle of lattice area " +
                                             std::to_string(a2) + "/2 found");
    area2 += a2;
    edge_count[{tri[0], tri[1]}]++;
    edge_count[{tri[0], tri[2]}]++;
    edge_count[{tri[1], tri[2]}]++;
  }
  if (area2 != fan.polygon.area2())
    throw Error(ErrorKind::NonGeneric, "non-generic stability parameter: triangles do not cover the polygon");
  for (const auto& [e, count] : edge_count) {
    const bool boundary = on_hull_boundary(fan.polygon.hull, fan.rays[e[0]].xy(), fan.rays[e[1]].xy());
    if (count != (boundary ? 1 : 2))
      throw Error(ErrorKind::NonGeneric, "non-generic stability parameter: triangles do not form a triangulation");
    fan.edges.push_back(e);
    if (!boundary) fan.compact_edges.push_back(e);
  }
  for (int r = 0; r < R; ++r)
    if (locate(fan.polygon.hull, fan.rays[r].xy()) == Location::Interior) fan.compact_rays.push_back(r);
  return fan;
}

Fan build_fan(const DimerModel& model, const StabilityParam& theta) {
  std::optional<Point2> anchor;
  if (model.anchor) anchor = Point2{(*model.anchor)[0], (*model.anchor)[1]};
  return build_fan(model, enumerate_perfect_matchings(model), homology_basis(model), theta, anchor);
}

std::vector<int> TorusInvariantModule::nonzero_arrows() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(nonzero.size()); ++a)
    if (nonzero[a]) out.push_back(a);
  return out;
}

TorusInvariantModule orbit_module(const DimerModel& model, const Fan& fan, const Cone& cone) {
  if (!fan.is_cone(cone)) throw Error(ErrorKind::Input, "orbit_module: not a cone of the fan");
  TorusInvariantModule mod;
  mod.cone = cone;
  mod.nonzero.assign(model.num_arrows(), 1);
  for (int r : cone)
    for (int a : fan.rays.at(r).matching.arrows) mod.nonzero[a] = 0;
  if (!satisfies_relations(model, mod.nonzero))
    throw Error(ErrorKind::CrossCheck, "orbit module violates an F-term relation");
  return mod;
}

std::vector<int> socle_vertices(const DimerModel& model, const TorusInvariantModule& module) {
  std::vector<char> sink(model.num_vertices, 1);
  for (const auto& a : model.arrows)
    if (module.nonzero[a.id]) sink[a.tail] = 0;
  std::vector<int> out;
  for (int v = 0; v < model.num_vertices; ++v)
    if (sink[v]) out.push_back(v);
  return out;
}

OriginFibre origin_fibre(const DimerModel& model, const Fan& fan) {
  OriginFibre fib;
  for (const auto& c : fan.cones()) {
    const auto mod = orbit_module(model, fan, c);
    bool in_fibre = true;
    for (const auto& a : model.arrows)
      if (a.head == 0 && mod.nonzero[a.id]) in_fibre = false;
    if (in_fibre) fib.orbits.push_back(c);
  }
  for (const auto& c : fib.orbits) {
    bool minimal = true;
    for (const auto& d : fib.orbits)
      if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) minimal = false;
    if (!minimal) continue;
    fib.components.push_back(c);
    if (c.size() == 1) {
      if (!fan.is_compact_ray(c[0])) throw Error(ErrorKind::CrossCheck, "origin fibre contains a non-compact divisor");
      fib.F2.push_back(c[0]);
    } else if (c.size() == 2) {
      if (!fan.is_compact_edge({c[0], c[1]})) throw Error(ErrorKind::CrossCheck, "origin fibre contains a non-compact curve");
      fib.F1.push_back({c[0], c[1]});
    } else if (c.size() == 3) {
      fib.F0.push_back({c[0], c[1], c[2]});
    } else {
      throw Error(ErrorKind::CrossCheck, "origin fibre contains the open torus orbit");
    }
  }
  const int kinds = !fib.F2.empty() + !fib.F1.empty() + !fib.F0.empty();
  fib.equidimensional = kinds <= 1;
  return fib;
}

std::vector<int> chart_section_path(const DimerModel& model, const Fan& fan, const Triangle& triangle, int j) {
  const auto mod = orbit_module(model, fan, Cone(triangle.begin(), triangle.end()));
  std::vector<int> prev(model.num_vertices, -2);
  prev[0] = -1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& a : model.arrows) {
      if (a.tail != v || !mod.nonzero[a.id] || prev[a.head] != -2) continue;
      prev[a.head] = a.id;
      queue.push_back(a.head);
    }
  }
  if (prev.at(j) == -2)
    throw Error(ErrorKind::CrossCheck, "vertex " + std::to_string(j) + " is not reachable from 0 in a chart module");
  std::vector<int> path;
  for (int v = j; v != 0; v = model.arrows[prev[v]].tail) path.push_back(prev[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace dimer
