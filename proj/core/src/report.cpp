#include "dimer/report.hpp"

#include <json.hpp>

namespace dimer {

namespace {

using nlohmann::json;

json one_based(const std::vector<int>& rays) {
  json out = json::array();
  for (int r : rays) out.push_back(r + 1);
  return out;
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json points_json(const std::vector<Point2>& ps) {
  json out = json::array();
  for (auto p : ps) out.push_back(point_json(p));
  return out;
}

json orbit_json(const Cone& c) {
  std::string name;
  for (std::size_t k = 0; k < c.size(); ++k) name += (k ? "∩" : "") + ("E" + std::to_string(c[k] + 1));
  return {{"rays", one_based(c)}, {"dimension", 3 - static_cast<int>(c.size())}, {"name", name}};
}

json orbits_json(const std::vector<Cone>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(orbit_json(c));
  return out;
}

json fibre_json(const OriginFibre& f) {
  json f1 = json::array();
  for (const auto& e : f.F1) f1.push_back(one_based({e[0], e[1]}));
  json f0 = json::array();
  for (const auto& t : f.F0) f0.push_back(one_based({t[0], t[1], t[2]}));
  return {{"F2", one_based(f.F2)}, {"F1", f1}, {"F0", f0}, {"equidimensional", f.equidimensional}};
}

json opt_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string validate_report(const DimerModel& model, const std::vector<std::string>& diagnostics) {
  return dump({{"valid", diagnostics.empty()},
               {"diagnostics", diagnostics},
               {"vertices", model.num_vertices},
               {"arrows", model.num_arrows()},
               {"faces", model.num_faces()},
               {"note", "consistency of the dimer model is assumed, not certified"}});
}

std::string matchings_report(const MatchingPoints& points) {
  json list = json::array();
  for (const auto& mp : points.points) list.push_back({{"matching", mp.matching.arrows}, {"point", point_json(mp.xy())}});
  const auto& poly = points.polygon;
  json lattice = json::array();
  for (const auto& lp : poly.points) lattice.push_back({{"point", point_json(lp.p)}, {"multiplicity", lp.multiplicity}});
  return dump({{"matchings", list},
               {"polygon",
                {{"hull", points_json(poly.hull)},
                 {"interior", points_json(poly.interior())},
                 {"boundary_nonvertex", points_json(poly.boundary_nonvertex())},
                 {"lattice_points", lattice},
                 {"area2", poly.area2()}}}});
}

std::string fan_report(const DimerModel& model, const Fan& fan) {
  json rays = json::array();
  for (int r = 0; r < fan.num_rays(); ++r) {
    const auto& ray = fan.rays[r];
    rays.push_back({{"index", r + 1},
                    {"point", point_json(ray.xy())},
                    {"matching", ray.matching.arrows},
                    {"compact", fan.is_compact_ray(r)}});
  }
  json tris = json::array();
  for (const auto& t : fan.triangles) tris.push_back(one_based({t[0], t[1], t[2]}));
  json edges = json::array();
  for (const auto& e : fan.edges) edges.push_back({{"rays", one_based({e[0], e[1]})}, {"compact", fan.is_compact_edge(e)}});
  json modules = json::array();
  for (const auto& c : fan.cones()) {
    if (c.empty()) continue;
    const auto mod = orbit_module(model, fan, c);
    modules.push_back({{"cone", one_based(c)}, {"nonzero_arrows", mod.nonzero_arrows()}, {"socle", socle_vertices(model, mod)}});
  }
  return dump({{"rays", rays},
               {"triangles", tris},
               {"edges", edges},
               {"modules", modules},
               {"fibre", fibre_json(origin_fibre(model, fan))}});
}

std::string labels_report(const DimerModel& model, const Fan& fan) {
  json arrows = json::array();
  const auto labels = arrow_labels(model, fan);
  for (const auto& a : model.arrows) {
    arrows.push_back({{"arrow", a.id},
                      {"tail", a.tail},
                      {"head", a.head},
                      {"label", one_based(labels[a.id].support())},
                      {"divisor", to_string(labels[a.id])}});
  }
  json bundles = json::array();
  for (int i = 0; i < model.num_vertices; ++i)
    bundles.push_back({{"vertex", i}, {"rep", line_bundle_class(model, fan, i).representative.coeffs}});
  return dump({{"arrows", arrows}, {"bundles", bundles}});
}

std::string chamber_report(const StabilityParam& theta, const ChamberWalls& cw) {
  json th = json::array();
  for (const auto& q : theta.theta) th.push_back(q.str());
  json ineq = json::array();
  for (auto s : cw.chamber.inequalities) {
    json verts = json::array();
    for (int v = 0; v < cw.chamber.num_vertices; ++v)
      if (s >> v & 1) verts.push_back(v);
    ineq.push_back(verts);
  }
  json walls = json::array();
  for (const auto& w : cw.walls) {
    walls.push_back({{"vertex", w.vertex},
                     {"wall", w.type != WallType::None},
                     {"type", to_string(w.type)},
                     {"socle_route", w.socle_route},
                     {"facet_route", w.facet_route},
                     {"unstable_locus", orbits_json(w.unstable_locus)}});
  }
  return dump({{"theta", th},
               {"dimension", cw.chamber.dimension()},
               {"inequalities", ineq},
               {"walls", walls}});
}

std::string psi_report(const Fan& fan, const PsiReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j{{"vertex", e.vertex},
           {"case", to_string(e.kind)},
           {"formula", e.formula()},
           {"support", orbits_json(e.support)},
           {"wall", {{"present", e.wall}, {"type", to_string(e.wall_type)}}}};
    j["bundle"] = e.bundle ? json{{"rep", e.bundle->coeffs}} : json{{"rep", std::vector<long>(fan.num_rays(), 0)}};
    if (e.fibre) {
      j["fibre"] = fibre_json(*e.fibre);
      j["pure"] = e.pure;
    }
    const auto& c = e.checks;
    j["checks"] = {{"relations", opt_json(c.relations)},
                   {"one_of_three", opt_json(c.one_of_three)},
                   {"h2_zero", opt_json(c.h2_zero)},
                   {"exclusivity", opt_json(c.exclusivity)},
                   {"connectivity", opt_json(c.connectivity)},
                   {"dimension2", opt_json(c.dimension2)},
                   {"flop_degrees", opt_json(c.flop_degrees)},
                   {"socle_eq_facet", opt_json(c.socle_eq_facet)},
                   {"vanishing_pattern", opt_json(c.vanishing_pattern)},
                   {"h2_matches_f2", opt_json(c.h2_matches_f2)}};
    j["failures"] = e.failures;
    entries.push_back(std::move(j));
  }
  return dump({{"entries", entries},
               {"all_checks_pass", report.all_checks_pass()},
               {"note", "supports are reduced; scheme-theoretic multiplicities are not reported"}});
}

}  // namespace dimer
