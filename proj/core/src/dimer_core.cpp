#include "dimer/dimer_core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dimer {

using nlohmann::json;

namespace {

[[noreturn]] void input_error(const std::string& msg) { throw Error(ErrorKind::Input, msg); }

int get_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    input_error(where + ": missing or non-integer '" + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

DimerModel parse_dimer(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) input_error("document must be a JSON object");

  DimerModel model;
  model.num_vertices = get_int(doc, "vertices", "document");
  if (!doc.contains("arrows") || !doc["arrows"].is_array()) input_error("document: missing 'arrows' list");
  if (!doc.contains("faces") || !doc["faces"].is_array()) input_error("document: missing 'faces' list");

  const auto& arrows = doc["arrows"];
  model.arrows.resize(arrows.size());
  std::vector<bool> seen(arrows.size(), false);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    const std::string where = "arrow entry " + std::to_string(k);
    if (!a.is_object()) input_error(where + ": not an object");
    Arrow arrow;
    arrow.id = get_int(a, "id", where);
    arrow.tail = get_int(a, "tail", where);
    arrow.head = get_int(a, "head", where);
    if (!a.contains("wind") || !a["wind"].is_array() || a["wind"].size() != 2 ||
        !a["wind"][0].is_number_integer() || !a["wind"][1].is_number_integer())
      input_error(where + ": 'wind' must be a pair of integers");
    arrow.wind = {a["wind"][0].get<int>(), a["wind"][1].get<int>()};
    if (arrow.id < 0 || arrow.id >= static_cast<int>(arrows.size()) || seen[arrow.id])
      input_error(where + ": arrow ids must be dense and unique in 0.." + std::to_string(arrows.size() - 1));
    seen[arrow.id] = true;
    model.arrows[arrow.id] = arrow;
  }

  for (std::size_t k = 0; k < doc["faces"].size(); ++k) {
    const auto& f = doc["faces"][k];
    const std::string where = "face entry " + std::to_string(k);
    if (!f.is_object()) input_error(where + ": not an object");
    Face face;
    face.sign = get_int(f, "sign", where);
    if (!f.contains("boundary") || !f["boundary"].is_array()) input_error(where + ": missing 'boundary'");
    for (const auto& id : f["boundary"]) {
      if (!id.is_number_integer()) input_error(where + ": boundary entries must be arrow ids");
      face.boundary.push_back(id.get<int>());
    }
    model.faces.push_back(std::move(face));
  }

  if (doc.contains("positions")) {
    std::vector<std::array<double, 2>> pos;
    for (const auto& p : doc["positions"]) {
      if (!p.is_array() || p.size() != 2) input_error("positions: each entry must be [x, y]");
      pos.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    if (static_cast<int>(pos.size()) != model.num_vertices) input_error("positions: one entry per vertex required");
    model.positions = std::move(pos);
  }
  if (doc.contains("period")) {
    const auto& p = doc["period"];
    if (!p.is_array() || p.size() != 2) input_error("period must be [px, py]");
    model.period = std::array<double, 2>{p[0].get<double>(), p[1].get<double>()};
  }
  if (doc.contains("anchor")) {
    const auto& p = doc["anchor"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      input_error("anchor must be a pair of integers");
    model.anchor = std::array<long, 2>{p[0].get<long>(), p[1].get<long>()};
  }

  auto diagnostics = validate_dimer(model);
  if (!diagnostics.empty()) {
    std::string msg = "invalid dimer model:";
    for (const auto& d : diagnostics) msg += "\n  " + d;
    throw Error(ErrorKind::Validation, msg);
  }
  return model;
}

std::string serialize_dimer(const DimerModel& model) {
  json doc = json::object();
  doc["vertices"] = model.num_vertices;
  doc["arrows"] = json::array();
  for (const auto& a : model.arrows)
    doc["arrows"].push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"wind", {a.wind[0], a.wind[1]}}});
  doc["faces"] = json::array();
  for (const auto& f : model.faces) doc["faces"].push_back({{"sign", f.sign}, {"boundary", f.boundary}});
  if (model.positions) {
    json pos = json::array();
    for (const auto& p : *model.positions) pos.push_back({p[0], p[1]});
    doc["positions"] = pos;
  }
  if (model.period) doc["period"] = {(*model.period)[0], (*model.period)[1]};
  if (model.anchor) doc["anchor"] = {(*model.anchor)[0], (*model.anchor)[1]};
  return doc.dump(2) + "\n";
}

DimerModel load_dimer(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dimer(buf.str());
}

std::vector<std::string> validate_dimer(const DimerModel& model) {
  std::vector<std::string> out;
  const int V = model.num_vertices;
  const int E = model.num_arrows();
  const int F = model.num_faces();
  if (V < 1) out.push_back("model has no vertices");

  bool arrows_ok = true;
  for (int k = 0; k < E; ++k) {
    const auto& a = model.arrows[k];
    if (a.id != k) {
      out.push_back("arrow at position " + std::to_string(k) + " has id " + std::to_string(a.id));
      arrows_ok = false;
    }
    if (a.tail < 0 || a.tail >= V || a.head < 0 || a.head >= V) {
      out.push_back("arrow " + std::to_string(k) + " has an endpoint outside 0.." + std::to_string(V - 1));
      arrows_ok = false;
    }
  }
  if (!arrows_ok) return out;

  std::vector<int> plus_count(E, 0), minus_count(E, 0);
  std::size_t total_length = 0;
  for (int f = 0; f < F; ++f) {
    const auto& face = model.faces[f];
    const std::string name = "face " + std::to_string(f);
    if (face.sign != 1 && face.sign != -1) out.push_back(name + " has sign " + std::to_string(face.sign) + " (expected 1 or -1)");
    const auto& b = face.boundary;
    if (b.size() < 3) {
      out.push_back(name + " has length " + std::to_string(b.size()) + " (expected at least 3)");
      continue;
    }
    bool ids_ok = true;
    for (int id : b) {
      if (id < 0 || id >= E) {
        out.push_back(name + " refers to unknown arrow " + std::to_string(id));
        ids_ok = false;
      }
    }
    if (!ids_ok) continue;
    total_length += b.size();
    std::array<int, 2> wind{0, 0};
    for (std::size_t k = 0; k < b.size(); ++k) {
      const auto& a = model.arrows[b[k]];
      const auto& next = model.arrows[b[(k + 1) % b.size()]];
      if (a.head != next.tail)
        out.push_back(name + " does not chain: arrow " + std::to_string(a.id) + " ends at " + std::to_string(a.head) +
                      " but arrow " + std::to_string(next.id) + " starts at " + std::to_string(next.tail));
      wind[0] += a.wind[0];
      wind[1] += a.wind[1];
      (face.sign > 0 ? plus_count : minus_count)[a.id]++;
    }
    if (wind != std::array<int, 2>{0, 0})
      out.push_back(name + " has nonzero total winding (" + std::to_string(wind[0]) + "," + std::to_string(wind[1]) + ")");
  }
  for (int a = 0; a < E; ++a) {
    if (plus_count[a] != 1)
      out.push_back("arrow " + std::to_string(a) + " lies on " + std::to_string(plus_count[a]) + " faces with sign +1");
    if (minus_count[a] != 1)
      out.push_back("arrow " + std::to_string(a) + " lies on " + std::to_string(minus_count[a]) + " faces with sign -1");
  }
  if (total_length != 2 * static_cast<std::size_t>(E))
    out.push_back("sum of face lengths " + std::to_string(total_length) + " differs from 2|Q1| = " + std::to_string(2 * E));
  if (V - E + F != 0)
    out.push_back("Euler characteristic V - E + F = " + std::to_string(V - E + F) + " (expected 0)");

  if (V >= 1) {
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : model.arrows) parent[find(a.tail)] = find(a.head);
    for (int v = 0; v < V; ++v)
      if (find(v) != find(0)) {
        out.push_back("vertex " + std::to_string(v) + " is not connected to vertex 0");
        break;
      }
    std::vector<int> outdeg(V, 0), indeg(V, 0);
    for (const auto& a : model.arrows) {
      outdeg[a.tail]++;
      indeg[a.head]++;
    }
    for (int v = 0; v < V; ++v) {
      if (outdeg[v] != indeg[v])
        out.push_back("vertex " + std::to_string(v) + " has out-degree " + std::to_string(outdeg[v]) + " but in-degree " +
                      std::to_string(indeg[v]));
      else if (outdeg[v] == 0)
        out.push_back("vertex " + std::to_string(v) + " has no arrows");
    }
  }

  if (out.empty()) {
    for (int v = 0; v < V; ++v) {
      try {
        vertex_rotation(model, v);
      } catch (const Error& e) {
        out.push_back(e.what());
      }
    }
  }
  return out;
}

int face_of(const DimerModel& model, int a, int sign) {
  for (int f = 0; f < model.num_faces(); ++f) {
    const auto& face = model.faces[f];
    if (face.sign != sign) continue;
    if (std::find(face.boundary.begin(), face.boundary.end(), a) != face.boundary.end()) return f;
  }
  throw Error(ErrorKind::Validation, "arrow " + std::to_string(a) + " has no face with sign " + std::to_string(sign));
}

std::vector<int> face_path_after(const Face& face, std::size_t k, std::size_t count) {
  std::vector<int> path;
  const std::size_t n = face.boundary.size();
  for (std::size_t s = 1; s <= count; ++s) path.push_back(face.boundary[(k + s) % n]);
  return path;
}

std::vector<FTermRelation> f_term_relations(const DimerModel& model) {
  std::vector<FTermRelation> rels;
  for (const auto& a : model.arrows) {
    FTermRelation r;
    r.arrow = a.id;
    for (int sign : {1, -1}) {
      const auto& face = model.faces[face_of(model, a.id, sign)];
      const auto pos = std::find(face.boundary.begin(), face.boundary.end(), a.id) - face.boundary.begin();
      auto path = face_path_after(face, pos, face.boundary.size() - 1);
      (sign > 0 ? r.plus_path : r.minus_path) = std::move(path);
    }
    rels.push_back(std::move(r));
  }
  return rels;
}

Rotation vertex_rotation(const DimerModel& model, int i) {
  Rotation rot;
  rot.vertex = i;
  std::vector<int> outs, ins;
  for (const auto& a : model.arrows) {
    if (a.tail == i) outs.push_back(a.id);
    if (a.head == i) ins.push_back(a.id);
  }
  if (outs.size() != ins.size())
    throw Error(ErrorKind::Validation, "vertex " + std::to_string(i) + ": out-degree differs from in-degree");
  if (outs.empty()) throw Error(ErrorKind::Validation, "vertex " + std::to_string(i) + " has no arrows");

  // Corner (b, a) of a face: b is followed by a.
  auto predecessor = [&](int a, int sign) {
    const auto& face = model.faces[face_of(model, a, sign)];
    const auto& bd = face.boundary;
    const auto pos = std::find(bd.begin(), bd.end(), a) - bd.begin();
    return bd[(pos + bd.size() - 1) % bd.size()];
  };
  auto successor = [&](int b, int sign) {
    const auto& face = model.faces[face_of(model, b, sign)];
    const auto& bd = face.boundary;
    const auto pos = std::find(bd.begin(), bd.end(), b) - bd.begin();
    return bd[(pos + 1) % bd.size()];
  };

  int a = outs.front();
  do {
    rot.out.push_back(a);
    const int b = predecessor(a, -1);
    rot.in.push_back(b);
    a = successor(b, +1);
    if (rot.out.size() > outs.size()) break;
  } while (a != rot.out.front());

  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(rot.out) != outs || sorted(rot.in) != ins)
    throw Error(ErrorKind::Validation,
                "vertex " + std::to_string(i) + ": rotation of arrows is not a single cycle");
  return rot;
}

std::optional<int> weak_path_end(const DimerModel& model, const WeakPath& p, int start) {
  int v = start;
  for (const auto& s : p.steps) {
    if (s.arrow < 0 || s.arrow >= model.num_arrows()) return std::nullopt;
    const auto& a = model.arrows[s.arrow];
    if (s.exponent > 0) {
      if (a.tail != v) return std::nullopt;
      v = a.head;
    } else {
      if (a.head != v) return std::nullopt;
      v = a.tail;
    }
  }
  return v;
}

std::array<int, 2> weak_path_winding(const DimerModel& model, const WeakPath& p) {
  std::array<int, 2> w{0, 0};
  for (const auto& s : p.steps) {
    w[0] += s.exponent * model.arrows[s.arrow].wind[0];
    w[1] += s.exponent * model.arrows[s.arrow].wind[1];
  }
  return w;
}

WeakPath inverse(const WeakPath& p) {
  WeakPath q;
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) q.steps.push_back({it->arrow, -it->exponent});
  return q;
}

WeakPath concat(const WeakPath& p, const WeakPath& q) {
  WeakPath r = p;
  r.steps.insert(r.steps.end(), q.steps.begin(), q.steps.end());
  return r;
}

WeakPath forward_path(const std::vector<int>& arrows) {
  WeakPath p;
  for (int a : arrows) p.steps.push_back({a, 1});
  return p;
}

DimerModel opposite_dimer(const DimerModel& model) {
  DimerModel op = model;
  for (auto& a : op.arrows) {
    std::swap(a.tail, a.head);
    a.wind = {-a.wind[0], -a.wind[1]};
  }
  for (auto& f : op.faces) {
    f.sign = -f.sign;
    std::reverse(f.boundary.begin(), f.boundary.end());
  }
  return op;
}

}  // namespace dimer
