#include "dimer/matchings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace dimer {

bool PerfectMatching::contains(int a) const { return std::binary_search(arrows.begin(), arrows.end(), a); }

std::vector<Point2> Polygon::interior() const {
  std::vector<Point2> out;
  for (const auto& lp : points)
    if (lp.location == Location::Interior) out.push_back(lp.p);
  return out;
}

std::vector<Point2> Polygon::boundary_nonvertex() const {
  std::vector<Point2> out;
  for (const auto& lp : points)
    if (lp.location == Location::Boundary && !lp.hull_vertex) out.push_back(lp.p);
  return out;
}

namespace {

struct ExactCover {
  const DimerModel& model;
  std::vector<std::array<int, 2>> arrow_faces;
  std::vector<std::vector<int>> face_arrows;
  std::vector<char> covered;
  std::vector<int> chosen;
  std::vector<PerfectMatching> found;

  explicit ExactCover(const DimerModel& m) : model(m) {
    arrow_faces.resize(m.num_arrows());
    face_arrows.resize(m.num_faces());
    for (int f = 0; f < m.num_faces(); ++f)
      for (int a : m.faces[f].boundary) face_arrows[f].push_back(a);
    for (int a = 0; a < m.num_arrows(); ++a) arrow_faces[a] = {face_of(m, a, 1), face_of(m, a, -1)};
    covered.assign(m.num_faces(), 0);
  }

  bool available(int a) const { return !covered[arrow_faces[a][0]] && !covered[arrow_faces[a][1]]; }

  void search() {
    int best = -1;
    std::size_t best_count = 0;
    for (int f = 0; f < model.num_faces(); ++f) {
      if (covered[f]) continue;
      std::size_t count = 0;
      for (int a : face_arrows[f])
        if (available(a)) ++count;
      if (best < 0 || count < best_count) {
        best = f;
        best_count = count;
      }
      if (count == 0) return;
    }
    if (best < 0) {
      PerfectMatching pm{chosen};
      std::sort(pm.arrows.begin(), pm.arrows.end());
      found.push_back(std::move(pm));
      return;
    }
    for (int a : face_arrows[best]) {
      if (!available(a)) continue;
      covered[arrow_faces[a][0]] = covered[arrow_faces[a][1]] = 1;
      chosen.push_back(a);
      search();
      chosen.pop_back();
      covered[arrow_faces[a][0]] = covered[arrow_faces[a][1]] = 0;
    }
  }
};

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const DimerModel& model) {
  ExactCover ec(model);
  ec.search();
  std::sort(ec.found.begin(), ec.found.end());
  ec.found.erase(std::unique(ec.found.begin(), ec.found.end()), ec.found.end());
  return ec.found;
}

long weak_path_degree(const PerfectMatching& pm, const WeakPath& p) {
  long d = 0;
  for (const auto& s : p.steps)
    if (pm.contains(s.arrow)) d += s.exponent;
  return d;
}

namespace {

WeakPath cover_search(const DimerModel& model, std::array<int, 2> target) {
  const int window = std::max(1, model.num_arrows());
  const int side = 2 * window + 1;
  auto index = [&](int v, int dx, int dy) { return (v * side + (dx + window)) * side + (dy + window); };
  const std::size_t states = static_cast<std::size_t>(model.num_vertices) * side * side;
  std::vector<int> prev_state(states, -2);
  std::vector<WeakStep> prev_step(states);

  std::vector<std::vector<int>> incident(model.num_vertices);
  for (const auto& a : model.arrows) {
    incident[a.tail].push_back(a.id);
    if (a.head != a.tail) incident[a.head].push_back(a.id);
  }

  std::deque<std::tuple<int, int, int>> queue;
  prev_state[index(0, 0, 0)] = -1;
  queue.emplace_back(0, 0, 0);
  const int goal = index(0, target[0], target[1]);
  while (!queue.empty() && prev_state[goal] == -2) {
    auto [v, dx, dy] = queue.front();
    queue.pop_front();
    const int here = index(v, dx, dy);
    for (int id : incident[v]) {
      const auto& a = model.arrows[id];
      for (int e : {1, -1}) {
        if ((e > 0 && a.tail != v) || (e < 0 && a.head != v)) continue;
        const int w = e > 0 ? a.head : a.tail;
        const int nx = dx + e * a.wind[0], ny = dy + e * a.wind[1];
        if (std::abs(nx) > window || std::abs(ny) > window) continue;
        const int there = index(w, nx, ny);
        if (prev_state[there] != -2) continue;
        prev_state[there] = here;
        prev_step[there] = {id, e};
        queue.emplace_back(w, nx, ny);
      }
    }
  }
  if (prev_state[goal] == -2)
    throw Error(ErrorKind::Validation, "no weak cycle at vertex 0 with winding (" + std::to_string(target[0]) + "," +
                                           std::to_string(target[1]) + ") inside the search window");
  WeakPath p;
  for (int s = goal; prev_state[s] != -1; s = prev_state[s]) p.steps.push_back(prev_step[s]);
  std::reverse(p.steps.begin(), p.steps.end());
  return p;
}

}  // namespace

HomologyBasis homology_basis(const DimerModel& model) {
  HomologyBasis basis;
  basis.x_path = cover_search(model, {1, 0});
  basis.y_path = cover_search(model, {0, 1});

  for (int sign : {-1, 1}) {
    for (const auto& face : model.faces) {
      if (face.sign != sign) continue;
      const auto& bd = face.boundary;
      for (std::size_t k = 0; k < bd.size(); ++k) {
        if (model.arrows[bd[k]].tail != 0) continue;
        std::vector<int> cyc;
        for (std::size_t s = 0; s < bd.size(); ++s) cyc.push_back(bd[(k + s) % bd.size()]);
        basis.z_cycle = forward_path(cyc);
        return basis;
      }
    }
  }
  throw Error(ErrorKind::Validation, "vertex 0 lies on no face");
}

MatchingPoints matching_points_and_polygon(const DimerModel& /*model*/, const std::vector<PerfectMatching>& matchings,
                                           const HomologyBasis& basis, std::optional<Point2> anchor) {
  MatchingPoints out;
  std::vector<Point2> raw;
  for (const auto& pm : matchings) {
    raw.push_back({weak_path_degree(pm, basis.x_path), weak_path_degree(pm, basis.y_path)});
    if (weak_path_degree(pm, basis.z_cycle) != 1)
      throw Error(ErrorKind::Inconsistent, "a perfect matching has degree different from 1 on a face cycle");
  }
  const auto raw_hull = convex_hull(raw);
  if (raw_hull.size() < 3) throw Error(ErrorKind::Inconsistent, "matching points are collinear");

  Point2 shift;
  if (anchor) {
    const Point2 smallest = *std::min_element(raw_hull.begin(), raw_hull.end());
    shift = *anchor - smallest;
  } else {
    Point2 lo = raw.front();
    for (const auto& p : raw) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
    }
    shift = Point2{0, 0} - lo;
  }
  out.shift = shift;

  std::map<Point2, int> multiplicity;
  std::vector<Point2> shifted;
  for (std::size_t k = 0; k < matchings.size(); ++k) {
    const Point2 p = raw[k] + shift;
    out.points.push_back({matchings[k], {p.x, p.y, 1}});
    shifted.push_back(p);
    multiplicity[p]++;
  }
  out.polygon.hull = convex_hull(shifted);
  for (const auto& p : lattice_points(out.polygon.hull)) {
    LatticePoint lp;
    lp.p = p;
    lp.location = locate(out.polygon.hull, p);
    lp.hull_vertex = std::find(out.polygon.hull.begin(), out.polygon.hull.end(), p) != out.polygon.hull.end();
    auto it = multiplicity.find(p);
    lp.multiplicity = it == multiplicity.end() ? 0 : it->second;
    out.polygon.points.push_back(lp);
  }
  return out;
}

}  // namespace dimer
