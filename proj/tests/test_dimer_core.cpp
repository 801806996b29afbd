#include <doctest.h>

#include <algorithm>

#include "dimer/dimer_core.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

bool has_diagnostic(const std::vector<std::string>& diags, const std::string& needle) {
  return std::any_of(diags.begin(), diags.end(), [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_dimer(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document was accepted");
  return ErrorKind::Input;
}

}  // namespace

TEST_SUITE("dimer_core") {

TEST_CASE("fixtures load and validate") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    CHECK(validate_dimer(model).empty());
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    CHECK(parse_dimer(serialize_dimer(model)) == model);
  }
}

TEST_CASE("malformed documents are input errors") {
  CHECK(parse_kind("not json") == ErrorKind::Input);
  CHECK(parse_kind("[]") == ErrorKind::Input);
  CHECK(parse_kind(R"({"vertices": 1, "faces": []})") == ErrorKind::Input);
  CHECK(parse_kind(R"({"vertices": 1, "arrows": [{"id": 0, "tail": 0, "head": 0, "wind": [1]}], "faces": []})") ==
        ErrorKind::Input);
}

TEST_CASE("invariant violations are reported") {
  auto model = oracle::fixture("conifold");
  SUBCASE("short face") {
    model.faces[0].boundary.resize(2);
    CHECK(has_diagnostic(validate_dimer(model), "face 0"));
  }
  SUBCASE("winding") {
    model.arrows[0].wind = {5, 0};
    CHECK(!validate_dimer(model).empty());
  }
  SUBCASE("broken chain") {
    std::swap(model.faces[0].boundary[0], model.faces[0].boundary[1]);
    CHECK(!validate_dimer(model).empty());
  }
  SUBCASE("bad head") {
    model.arrows[1].head = 7;
    CHECK(!validate_dimer(model).empty());
  }
  SUBCASE("parse rejects with validation kind") {
    model.faces[1].sign = 1;
    CHECK(parse_kind(serialize_dimer(model)) == ErrorKind::Validation);
  }
}

TEST_CASE("Euler characteristic of the torus") {
  for (const auto& name : oracle::all_fixtures()) {
    const auto m = oracle::fixture(name);
    CHECK(m.num_vertices - m.num_arrows() + m.num_faces() == 0);
  }
}

TEST_CASE("F-term relations pair the two faces of each arrow") {
  for (const auto& name : oracle::all_fixtures()) {
    const auto model = oracle::fixture(name);
    const auto rels = f_term_relations(model);
    REQUIRE(rels.size() == model.arrows.size());
    for (const auto& r : rels) {
      const auto& a = model.arrows[r.arrow];
      const auto& plus = model.faces[face_of(model, a.id, 1)].boundary;
      const auto& minus = model.faces[face_of(model, a.id, -1)].boundary;
      CHECK(r.plus_path.size() + 1 == plus.size());
      CHECK(r.minus_path.size() + 1 == minus.size());
      // Both sides run from head(a) back to tail(a).
      for (const auto* p : {&r.plus_path, &r.minus_path}) {
        CHECK(model.arrows[p->front()].tail == a.head);
        CHECK(model.arrows[p->back()].head == a.tail);
        const auto end = weak_path_end(model, forward_path(*p), a.head);
        REQUIRE(end.has_value());
        CHECK(*end == a.tail);
      }
      // The two sides wind the same way: each face cycle is null-homologous.
      auto wind = [&](const std::vector<int>& p) { return weak_path_winding(model, forward_path(p)); };
      CHECK(wind(r.plus_path) == wind(r.minus_path));
    }
  }
}

TEST_CASE("rotation interleaves the corners of the two face signs") {
  for (const auto& name : oracle::all_fixtures()) {
    const auto model = oracle::fixture(name);
    for (int i = 0; i < model.num_vertices; ++i) {
      CAPTURE(name);
      CAPTURE(i);
      const auto rot = vertex_rotation(model, i);
      const int m = rot.m();
      auto corner = [&](int b, int a, int sign) {
        const auto& bd = model.faces[face_of(model, b, sign)].boundary;
        for (std::size_t k = 0; k < bd.size(); ++k)
          if (bd[k] == b && bd[(k + 1) % bd.size()] == a) return true;
        return false;
      };
      std::vector<int> outs = rot.out, ins = rot.in;
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      std::vector<int> expect_out, expect_in;
      for (const auto& a : model.arrows) {
        if (a.tail == i) expect_out.push_back(a.id);
        if (a.head == i) expect_in.push_back(a.id);
      }
      CHECK(outs == expect_out);
      CHECK(ins == expect_in);
      CHECK(rot.out[0] == expect_out.front());
      for (int j = 0; j < m; ++j) {
        CHECK(corner(rot.in[j], rot.out[(j + 1) % m], 1));
        CHECK(corner(rot.in[j], rot.out[j], -1));
      }
    }
  }
}

TEST_CASE("conifold rotation") {
  const auto model = oracle::fixture("conifold");
  const auto rot = vertex_rotation(model, 0);
  CHECK(rot.m() == 2);
  CHECK(rot.out == std::vector<int>{0, 1});
  CHECK(rot.in == std::vector<int>{2, 3});
}

TEST_CASE("ten-vertex hexagon: vertex degrees") {
  const auto model = oracle::fixture("hexagon_10");
  const std::vector<int> expected{3, 2, 3, 2, 6, 3, 2, 2, 2, 3};
  for (int i = 0; i < model.num_vertices; ++i) CHECK(vertex_rotation(model, i).m() == expected[i]);
}

TEST_CASE("weak paths") {
  const auto model = oracle::fixture("conifold");
  const WeakPath p{{{0, 1}, {2, 1}}};
  CHECK(weak_path_end(model, p, 0) == 0);
  CHECK(weak_path_end(model, p, 1) == std::nullopt);
  CHECK(weak_path_end(model, concat(p, inverse(p)), 0) == 0);
  CHECK(weak_path_winding(model, concat(p, inverse(p))) == std::array<int, 2>{0, 0});
  CHECK(weak_path_winding(model, p) == std::array<int, 2>{0, -1});
}

TEST_CASE("opposite dimer is an involution") {
  for (const auto& name : oracle::all_fixtures()) {
    const auto model = oracle::fixture(name);
    const auto opp = opposite_dimer(model);
    CHECK(validate_dimer(opp).empty());
    CHECK(opposite_dimer(opp) == model);
    CHECK(opp.arrows[0].tail == model.arrows[0].head);
  }
}

}
