#include "dimer/reid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace dimer {

namespace {

int wrap(int j, int m) { return ((j - 1) % m + m) % m; }

bool in(int rho, const TorusDivisor& d) { return d.coeffs.at(rho) > 0; }

std::string ray_name(int r) { return "E" + std::to_string(r + 1); }

std::string cone_name(const Cone& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "∩" : "") + ray_name(c[k]);
  return s.empty() ? "X" : s;
}

std::string support_name(const std::vector<Cone>& cs) {
  std::string s;
  for (std::size_t k = 0; k < cs.size(); ++k) s += (k ? "∪" : "") + cone_name(cs[k]);
  return s.empty() ? "∅" : s;
}

std::vector<Cone> minimal_cones(std::vector<Cone> cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<Cone> out;
  for (const auto& c : cs) {
    const bool has_smaller = std::any_of(cs.begin(), cs.end(), [&](const Cone& d) {
      return d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
    if (!has_smaller) out.push_back(c);
  }
  return out;
}

Cone cone_union(const Cone& a, const Cone& b) {
  Cone u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

bool connected(const Fan& fan, const std::vector<Cone>& components) {
  if (components.empty()) return true;
  std::vector<char> seen(components.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const auto k = stack.back();
    stack.pop_back();
    for (std::size_t l = 0; l < components.size(); ++l) {
      if (seen[l] || !fan.is_cone(cone_union(components[k], components[l]))) continue;
      seen[l] = 1;
      stack.push_back(l);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

TorusDivisor corner_label(const DimerModel& model, const Fan& fan, int b, int a) {
  for (int sign : {1, -1}) {
    const auto& face = model.faces[face_of(model, b, sign)];
    const auto& bd = face.boundary;
    for (std::size_t k = 0; k < bd.size(); ++k) {
      if (bd[k] != b || bd[(k + 1) % bd.size()] != a) continue;
      return path_label(model, fan, forward_path(face_path_after(face, k + 1, bd.size() - 2)));
    }
  }
  throw Error(ErrorKind::CrossCheck,
              "no face has the corner (" + std::to_string(b) + ", " + std::to_string(a) + ")");
}

Rational theta_of(const StabilityParam& theta, VertexSet s) {
  Rational sum = 0;
  for (std::size_t v = 0; v < theta.theta.size(); ++v)
    if (s >> v & 1) sum += theta.theta[v];
  return sum;
}

}  // namespace

const TorusDivisor& Wheel::D(int j) const { return in_spokes[wrap(j, m())]; }
const TorusDivisor& Wheel::out(int j) const { return out_spokes[wrap(j, m())]; }
const TorusDivisor& Wheel::rim_a(int j) const { return rim_to_a[wrap(j, m())]; }
const TorusDivisor& Wheel::rim_next(int j) const { return rim_to_next[wrap(j, m())]; }

Wheel build_wheel(const DimerModel& model, const Fan& fan, int i) {
  return build_wheel(model, fan, vertex_rotation(model, i));
}

Wheel build_wheel(const DimerModel& model, const Fan& fan, const Rotation& rotation) {
  Wheel w;
  w.rotation = rotation;
  const int m = rotation.m();
  if (m < 2 || static_cast<int>(rotation.in.size()) != m) throw Error(ErrorKind::Input, "malformed rotation");
  for (int j = 0; j < m; ++j) {
    const int a = rotation.out[j];
    const int b = rotation.in[j];
    const int a_next = rotation.out[(j + 1) % m];
    w.in_spokes.push_back(arrow_label(model, fan, a));
    w.out_spokes.push_back(arrow_label(model, fan, b));
    w.rim_to_a.push_back(corner_label(model, fan, b, a));
    w.rim_to_next.push_back(corner_label(model, fan, b, a_next));
  }
  return w;
}

bool wheel_relations_hold(const Wheel& w) {
  for (int j = 1; j <= w.m(); ++j) {
    if (w.rim_a(j) + w.D(j) != w.rim_next(j) + w.D(j + 1)) return false;
    if (w.rim_next(j - 1) + w.out(j - 1) != w.rim_a(j) + w.out(j)) return false;
  }
  return true;
}

bool one_of_three_holds(const Wheel& w, int rho) {
  for (int j = 1; j <= w.m(); ++j) {
    const long c = w.out(j).coeffs.at(rho);
    if (c + w.rim_a(j).coeffs.at(rho) + w.D(j).coeffs.at(rho) != 1) return false;
    if (c + w.rim_next(j).coeffs.at(rho) + w.D(j + 1).coeffs.at(rho) != 1) return false;
  }
  return true;
}

std::vector<Cone> h0_support(const Wheel& w, const Fan& fan) { return common_zero_support(fan, w.in_spokes); }

std::vector<Cone> h0_support_socle(const DimerModel& model, const Fan& fan, int i) {
  std::vector<Cone> hits;
  for (const auto& c : fan.cones()) {
    const auto sinks = socle_vertices(model, orbit_module(model, fan, c));
    if (std::find(sinks.begin(), sinks.end(), i) != sinks.end()) hits.push_back(c);
  }
  return minimal_cones(std::move(hits));
}

TorusDivisor h2_divisor(const Wheel& w) { return gcd(w.out_spokes); }

std::vector<std::pair<int, int>> transposition_order(int m) {
  std::vector<std::pair<int, int>> order;
  if (m < 2) return order;
  for (int j = 1; j < m; ++j) order.emplace_back(j, j + 1);
  if (m > 2) order.emplace_back(1, m);
  for (int nu = 3; nu <= m - 1; ++nu) order.emplace_back(1, nu);
  for (int mu = 2; mu <= m; ++mu)
    for (int nu = mu + 2; nu <= m; ++nu) order.emplace_back(mu, nu);
  return order;
}

std::vector<Cone> hminus1_filtration(const Wheel& w, const Fan& fan) {
  const int m = w.m();
  const int n = m * (m - 1) / 2;
  auto G = [&](int j) { return gcd({w.rim_a(j), w.rim_next(j)}); };
  std::vector<Cone> all;
  auto add = [&](const std::vector<TorusDivisor>& ds) {
    for (auto& c : common_zero_support(fan, ds)) all.push_back(std::move(c));
  };

  for (int j = 1; j <= m; ++j) {
    std::vector<TorusDivisor> big;
    for (int k = 1; k <= m; ++k) big.push_back(w.D(k));
    for (int k = j + 1; k <= m; ++k) big.push_back(G(k));
    add({G(j), difference(lcm(big), lcm({w.D(j), w.D(j + 1)}))});
  }
  for (int j = m + 1; j <= 2 * m - 3; ++j) {
    const int nu = j - m + 2;
    std::vector<TorusDivisor> big{w.D(1)};
    for (int k = nu; k <= m; ++k) big.push_back(w.D(k));
    const auto base = lcm({w.D(1), w.D(nu)});
    add({difference(lcm(big), base), difference(lcm({w.D(1), w.D(nu - 1), w.D(nu)}), base)});
  }
  const auto tau = transposition_order(m);
  for (int j = std::max(2 * m - 2, m + 1); j <= n; ++j) {
    const auto [mu_j, nu_j] = tau[j - 1];
    const auto base = lcm({w.D(mu_j), w.D(nu_j)});
    std::vector<int> mus(mu_j - 1);
    std::iota(mus.begin(), mus.end(), 1);
    mus.push_back(nu_j - 1);
    std::vector<TorusDivisor> ds;
    for (int mu : mus) ds.push_back(difference(lcm({w.D(mu), w.D(mu_j), w.D(nu_j)}), base));
    add(ds);
  }
  return minimal_cones(std::move(all));
}

std::vector<int> hminus1_criterion(const Wheel& w, const Fan& fan) {
  const int m = w.m();
  const int n = m * (m - 1) / 2;
  const auto tau = transposition_order(m);
  std::vector<int> out;
  for (int rho : fan.compact_rays) {
    auto inD = [&](int j) { return in(rho, w.D(j)); };
    auto inG = [&](int j) { return in(rho, w.rim_a(j)) && in(rho, w.rim_next(j)); };
    bool hit = false;
    for (int j = 1; j <= m && !hit; ++j) {
      if (!inG(j) || inD(j) || inD(j + 1)) continue;
      for (int mu = 1; mu <= m; ++mu)
        if (wrap(mu, m) != wrap(j, m) && wrap(mu, m) != wrap(j + 1, m) && inD(mu)) hit = true;
      for (int mu = j + 1; mu <= m; ++mu)
        if (inG(mu)) hit = true;
    }
    for (int j = m + 1; j <= 2 * m - 3 && !hit; ++j) {
      const int nu = j - m + 2;
      if (inD(1) || inD(nu) || !inD(nu - 1)) continue;
      for (int mu = nu + 1; mu <= m; ++mu)
        if (inD(mu)) hit = true;
    }
    for (int j = std::max(2 * m - 2, m + 1); j <= n && !hit; ++j) {
      const auto [mu_j, nu_j] = tau[j - 1];
      if (inD(mu_j) || inD(nu_j) || !inD(nu_j - 1)) continue;
      bool all = true;
      for (int mu = 1; mu < mu_j; ++mu) all = all && inD(mu);
      hit = all;
    }
    if (hit) out.push_back(rho);
  }
  return out;
}

std::vector<int> hminus1_support(const Wheel& w, const Fan& fan) {
  const auto components = hminus1_filtration(w, fan);
  std::vector<int> rays;
  for (const auto& c : components) {
    if (c.size() != 1 || !fan.is_compact_ray(c[0]))
      throw Error(ErrorKind::CrossCheck, "vertex " + std::to_string(w.vertex()) + ": H^-1 has a component " +
                                             cone_name(c) + " that is not a compact divisor");
    rays.push_back(c[0]);
  }
  if (rays != hminus1_criterion(w, fan))
    throw Error(ErrorKind::CrossCheck,
                "vertex " + std::to_string(w.vertex()) + ": H^-1 routes disagree on the support");
  return rays;
}

bool vanishing_pattern_holds(const Wheel& w, int rho) {
  const int m = w.m();
  std::set<int> ins, outs, rn, ra;
  for (int j = 1; j <= m; ++j) {
    if (in(rho, w.D(j))) ins.insert(j);
    if (in(rho, w.out(j))) outs.insert(j);
    if (in(rho, w.rim_next(j))) rn.insert(j);
    if (in(rho, w.rim_a(j))) ra.insert(j);
  }
  auto idx = [&](int j) { return wrap(j, m) + 1; };
  for (int mu = 1; mu <= m; ++mu) {
    for (int d = 1; d <= m; ++d) {
      const int nu = mu + d;
      std::set<int> pin, pout;
      for (int k = mu + 1; k <= nu - 1; ++k) pin.insert(idx(k));
      for (int k = nu; k <= mu + m - 1; ++k) pout.insert(idx(k));
      if (pin == ins && pout == outs && rn == std::set<int>{idx(nu - 1)} && ra == std::set<int>{idx(mu)})
        return true;
    }
  }
  return false;
}

bool Chamber::contains(const StabilityParam& theta) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](VertexSet s) { return theta_of(theta, s) > 0; });
}

std::string to_string(WallType t) {
  switch (t) {
    case WallType::None: return "none";
    case WallType::Type0: return "0";
    case WallType::TypeI: return "I";
  }
  return "?";
}

Chamber build_chamber(const DimerModel& model, const Fan& fan) {
  std::set<VertexSet> ineq;
  for (const auto& t : fan.triangles) {
    const auto mod = orbit_module(model, fan, Cone(t.begin(), t.end()));
    for (auto s : closed_subsets(model, mod.nonzero)) ineq.insert(s);
  }
  Chamber ch;
  ch.num_vertices = model.num_vertices;
  ch.inequalities.assign(ineq.begin(), ineq.end());
  return ch;
}

bool facet_on_vertex_hyperplane(const Chamber& chamber, int i) {
  const int nv = chamber.num_vertices;
  const VertexSet all = (VertexSet{1} << nv) - 1;
  const VertexSet single = VertexSet{1} << i;
  // Variables: u_0..u_{n-1}, v_0..v_{n-1} with theta = u - v, then one slack.
  const int nvar = 2 * nv + 1;
  auto theta_row = [&](VertexSet s, int sign) {
    std::vector<Rational> row(nvar, 0);
    for (int v = 0; v < nv; ++v) {
      if (!(s >> v & 1)) continue;
      row[v] = sign;
      row[nv + v] = -sign;
    }
    return row;
  };
  auto base = [&]() {
    LinearProgram lp;
    lp.c.assign(nvar, 0);
    lp.c[2 * nv] = 1;
    for (int sign : {1, -1}) {
      lp.A.push_back(theta_row(all, sign));
      lp.b.push_back(0);
    }
    std::vector<Rational> cap(nvar, 0);
    cap[2 * nv] = 1;
    lp.A.push_back(cap);
    lp.b.push_back(1);
    return lp;
  };

  // A point of the hyperplane where every other inequality is strict.
  LinearProgram interior = base();
  for (int sign : {1, -1}) {
    interior.A.push_back(theta_row(single, sign));
    interior.b.push_back(0);
  }
  for (auto s : chamber.inequalities) {
    if (s == single || s == (all & ~single)) continue;
    auto row = theta_row(s, -1);
    row[2 * nv] = 1;
    interior.A.push_back(row);
    interior.b.push_back(0);
  }
  if (maximize(interior).value <= 0) return false;

  // The closed chamber lies in theta_i >= 0.
  LinearProgram side = base();
  for (auto s : chamber.inequalities) {
    side.A.push_back(theta_row(s, -1));
    side.b.push_back(0);
  }
  auto row = theta_row(single, 1);
  row[2 * nv] = 1;
  side.A.push_back(row);
  side.b.push_back(0);
  return maximize(side).value == 0;
}

ChamberWalls chamber_and_walls(const DimerModel& model, const Fan& fan, const StabilityParam& theta) {
  ChamberWalls cw;
  cw.chamber = build_chamber(model, fan);
  if (!cw.chamber.contains(theta)) throw Error(ErrorKind::CrossCheck, "stability parameter outside its chamber");
  for (int i = 1; i < model.num_vertices; ++i) {
    WallInfo info;
    info.vertex = i;
    for (const auto& t : fan.triangles) {
      const auto sinks = socle_vertices(model, orbit_module(model, fan, Cone(t.begin(), t.end())));
      if (std::find(sinks.begin(), sinks.end(), i) != sinks.end()) info.socle_route = true;
    }
    info.facet_route = facet_on_vertex_hyperplane(cw.chamber, i);
    info.unstable_locus = h0_support(build_wheel(model, fan, i), fan);
    if (!info.unstable_locus.empty()) {
      const auto& z = info.unstable_locus;
      const bool divisors = std::all_of(z.begin(), z.end(), [&](const Cone& c) {
        return c.size() == 1 && fan.is_compact_ray(c[0]);
      });
      if (divisors) {
        info.type = WallType::Type0;
      } else if (z.size() == 1 && z[0].size() == 2 && fan.is_compact_edge({z[0][0], z[0][1]})) {
        info.type = WallType::TypeI;
      } else {
        throw Error(ErrorKind::CrossCheck, "vertex " + std::to_string(i) + ": unstable locus " + support_name(z) +
                                               " is neither compact divisors nor one compact curve");
      }
    }
    cw.walls.push_back(std::move(info));
  }
  return cw;
}

bool verify_flop_degrees(const DimerModel& model, const Fan& fan, int i, const CurveData& curve) {
  if (!is_minus1_minus1(fan, curve)) return false;
  for (int j = 1; j < model.num_vertices; ++j) {
    const long deg = bundle_degree_on_curve(line_bundle_class(model, fan, j), curve);
    if (deg != (j == i ? 1 : 0)) return false;
  }
  return true;
}

std::string to_string(PsiCase c) {
  switch (c) {
    case PsiCase::Div0: return "div0";
    case PsiCase::Curve0: return "curve0";
    case PsiCase::SheafMinus1: return "sheaf-1";
    case PsiCase::Dualizing: return "dualizing";
  }
  return "?";
}

bool PsiChecks::all_pass() const {
  for (const auto& c : {relations, one_of_three, h2_zero, exclusivity, connectivity, dimension2, flop_degrees,
                        socle_eq_facet, vanishing_pattern, h2_matches_f2})
    if (c && !*c) return false;
  return true;
}

std::string PsiEntry::formula() const {
  const std::string L = "L" + std::to_string(vertex) + "^-1";
  switch (kind) {
    case PsiCase::Div0:
    case PsiCase::Curve0: return L + "|" + support_name(support);
    case PsiCase::SheafMinus1: return "F[1], supp F = " + support_name(support);
    case PsiCase::Dualizing: return "ω[2] on " + support_name(support);
  }
  return "";
}

bool PsiReport::all_checks_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const PsiEntry& e) { return e.failures.empty(); });
}

std::vector<std::string> PsiReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.insert(out.end(), e.failures.begin(), e.failures.end());
  return out;
}

ZeroVertexReport psi_zero_vertex(const DimerModel& model, const Fan& fan) {
  ZeroVertexReport z;
  z.fibre = origin_fibre(model, fan);
  z.h2_support = h2_divisor(build_wheel(model, fan, 0)).support();
  z.hminus2 = z.fibre.F2;
  z.hminus1 = z.fibre.F1;
  z.pure = z.fibre.equidimensional;
  z.h2_matches_f2 = z.h2_support == z.fibre.F2;
  return z;
}

PsiReport classify_psi_unchecked(const DimerModel& model, const Fan& fan) {
  PsiReport report;
  const auto walls = chamber_and_walls(model, fan, special_theta(model.num_vertices));
  for (int i = 0; i < model.num_vertices; ++i) {
    PsiEntry e;
    e.vertex = i;
    auto record = [&](std::optional<bool>& slot, bool ok, const std::string& what) {
      slot = ok;
      if (!ok) e.failures.push_back("vertex " + std::to_string(i) + ": " + what);
    };
    const auto w = build_wheel(model, fan, i);
    record(e.checks.relations, wheel_relations_hold(w), "wheel relations fail");
    bool three = true;
    for (int rho = 0; rho < fan.num_rays(); ++rho) three = three && one_of_three_holds(w, rho);
    record(e.checks.one_of_three, three, "a corner violates one-of-three");

    if (i == 0) {
      const auto z = psi_zero_vertex(model, fan);
      e.kind = PsiCase::Dualizing;
      e.fibre = z.fibre;
      e.support = z.fibre.components;
      e.pure = z.pure;
      record(e.checks.h2_matches_f2, z.h2_matches_f2, "H^-2 support differs from the divisorial fibre");
      record(e.checks.connectivity, connected(fan, e.support), "fibre over the origin is disconnected");
      report.entries.push_back(std::move(e));
      continue;
    }

    const auto& wall = walls.walls[i - 1];
    e.bundle = -line_bundle_class(model, fan, i).representative;
    record(e.checks.h2_zero, h2_divisor(w).is_zero(), "H^1 of the dual is nonzero");

    const auto h0 = h0_support(w, fan);
    record(e.checks.socle_eq_facet,
           wall.socle_route == wall.facet_route && wall.facet_route == !h0.empty() && h0 == h0_support_socle(model, fan, i),
           "wall routes disagree");

    const auto filtration = hminus1_filtration(w, fan);
    const auto criterion = hminus1_criterion(w, fan);
    bool dim2 = true;
    std::vector<int> filt_rays;
    for (const auto& c : filtration) {
      if (c.size() != 1 || !fan.is_compact_ray(c[0])) dim2 = false;
      else filt_rays.push_back(c[0]);
    }
    record(e.checks.dimension2, dim2 && filt_rays == criterion, "H^-1 support routes disagree or are not divisorial");
    e.hminus1 = criterion;
    record(e.checks.exclusivity, h0.empty() != criterion.empty(), "H^0 and H^-1 are not exclusive");

    if (!h0.empty()) {
      e.support = h0;
      e.wall = true;
      e.wall_type = wall.type;
      e.kind = wall.type == WallType::TypeI ? PsiCase::Curve0 : PsiCase::Div0;
      if (wall.type == WallType::TypeI) {
        const auto curve = curve_intersection_data(fan, {h0[0][0], h0[0][1]});
        const std::string type = "(" + std::to_string(curve.intersection[curve.edge[0]]) + "," +
                                 std::to_string(curve.intersection[curve.edge[1]]) + ")";
        record(e.checks.flop_degrees, verify_flop_degrees(model, fan, i, curve),
               "unstable locus " + support_name(h0) + " is a " + type + "-curve; tautological degrees on it are not (1, 0, ..., 0)");
      }
    } else {
      e.kind = PsiCase::SheafMinus1;
      for (int r : criterion) e.support.push_back({r});
    }
    record(e.checks.connectivity, connected(fan, e.support), "support is disconnected");

    bool pattern = true;
    for (int rho : fan.compact_rays) {
      if (std::find(e.support.begin(), e.support.end(), Cone{rho}) != e.support.end()) continue;
      pattern = pattern && vanishing_pattern_holds(w, rho);
    }
    record(e.checks.vanishing_pattern, pattern, "vanishing pattern fails");
    report.entries.push_back(std::move(e));
  }
  return report;
}

PsiReport classify_psi(const DimerModel& model, const Fan& fan) {
  auto report = classify_psi_unchecked(model, fan);
  const auto f = report.failures();
  if (!f.empty()) throw Error(ErrorKind::CrossCheck, f.front());
  return report;
}

OppositeComparison compare_with_opposite(const DimerModel& model) {
  const auto theta = special_theta(model.num_vertices);
  const Fan f1 = build_fan(model, theta);
  const Fan f2 = build_fan(opposite_dimer(model), -theta);
  OppositeComparison cmp;

  auto ray_set = [](const Fan& f) {
    std::set<PerfectMatching> s;
    for (const auto& r : f.rays) s.insert(r.matching);
    return s;
  };
  cmp.same_rays = ray_set(f1) == ray_set(f2);

  auto tri_set = [](const Fan& f) {
    std::set<std::set<PerfectMatching>> s;
    for (const auto& t : f.triangles) s.insert({f.rays[t[0]].matching, f.rays[t[1]].matching, f.rays[t[2]].matching});
    return s;
  };
  cmp.same_triangles = tri_set(f1) == tri_set(f2);

  if (cmp.same_rays) {
    std::optional<Point2> c;
    cmp.points_reflected = true;
    for (const auto& r1 : f1.rays) {
      const auto it = std::find_if(f2.rays.begin(), f2.rays.end(),
                                   [&](const MatchingPoint& r2) { return r2.matching == r1.matching; });
      const Point2 sum = r1.xy() + it->xy();
      if (!c) c = sum;
      if (*c != sum) cmp.points_reflected = false;
    }
  }
  return cmp;
}

bool opposite_dimer_check(const DimerModel& model) { return compare_with_opposite(model).equal(); }

}  // namespace dimer
