#include <doctest.h>

#include <random>
#include <set>

#include "dimer/moduli_fan.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

Cone cone_of(std::initializer_list<int> one_based) {
  Cone c;
  for (int r : one_based) c.push_back(r - 1);
  return c;
}

StabilityParam random_theta(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-20, 20);
  StabilityParam t;
  Rational sum = 0;
  for (int i = 1; i < n; ++i) {
    t.theta.push_back(Rational(d(rng), 7));
    sum += t.theta.back();
  }
  t.theta.insert(t.theta.begin(), -sum);
  return t;
}

}  // namespace

TEST_SUITE("moduli_fan") {

TEST_CASE("special parameter") {
  const auto t = special_theta(4);
  CHECK(t.theta == std::vector<Rational>{-3, 1, 1, 1});
  CHECK(is_special(t));
  CHECK_FALSE(is_special(-t));
}

TEST_CASE("stability agrees with subset scan and reachability") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    const auto theta = special_theta(model.num_vertices);
    for (const auto& pm : enumerate_perfect_matchings(model)) {
      const auto s = is_stable_cosupport(model, pm.arrows, theta);
      CHECK(s == oracle::brute_force_stability(model, pm.arrows, theta));
      CHECK((s == Stability::Stable) == oracle::special_stable(model, pm));
    }
  }
}

TEST_CASE("stability agrees with subset scan for random parameters") {
  std::mt19937 rng(3);
  const auto model = oracle::fixture("hexagon_10");
  const auto ms = enumerate_perfect_matchings(model);
  for (int trial = 0; trial < 20; ++trial) {
    const auto theta = random_theta(model.num_vertices, rng);
    for (std::size_t k = 0; k < ms.size(); k += 3) {
      std::vector<int> cos = ms[k].arrows;
      const auto& other = ms[(k * 7 + trial) % ms.size()].arrows;
      cos.insert(cos.end(), other.begin(), other.end());
      std::sort(cos.begin(), cos.end());
      cos.erase(std::unique(cos.begin(), cos.end()), cos.end());
      CHECK(is_stable_cosupport(model, ms[k].arrows, theta) == oracle::brute_force_stability(model, ms[k].arrows, theta));
      CHECK(is_stable_cosupport(model, cos, theta) == oracle::brute_force_stability(model, cos, theta));
    }
  }
}

TEST_CASE("one stable matching per lattice point") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    const auto fan = build_fan(model, special_theta(model.num_vertices));
    CHECK(fan.num_rays() == static_cast<int>(fan.polygon.points.size()));
    CHECK(static_cast<int>(fan.triangles.size()) == model.num_vertices);
    std::set<Point2> pts;
    for (const auto& r : fan.rays) pts.insert(r.xy());
    CHECK(pts.size() == fan.rays.size());
    for (const auto& t : fan.triangles) {
      const long area2 = cross(fan.rays[t[0]].xy(), fan.rays[t[1]].xy(), fan.rays[t[2]].xy());
      CHECK((area2 == 1 || area2 == -1));
    }
  }
}

TEST_CASE("small fans") {
  SUBCASE("C3") {
    const auto fan = build_fan(oracle::fixture("one_vertex"), special_theta(1));
    CHECK(fan.num_rays() == 3);
    CHECK(fan.triangles.size() == 1);
    CHECK(fan.compact_rays.empty());
    CHECK(fan.compact_edges.empty());
  }
  SUBCASE("conifold: a square with one diagonal") {
    const auto fan = build_fan(oracle::fixture("conifold"), special_theta(2));
    CHECK(fan.num_rays() == 4);
    CHECK(fan.triangles.size() == 2);
    CHECK(fan.edges.size() == 5);
    CHECK(fan.compact_rays.empty());
    REQUIRE(fan.compact_edges.size() == 1);
  }
  SUBCASE("C3/Z3") {
    const auto fan = build_fan(oracle::fixture("hexagonal_z3"), special_theta(3));
    CHECK(fan.num_rays() == 4);
    CHECK(fan.triangles.size() == 3);
    CHECK(fan.compact_rays.size() == 1);
    CHECK(fan.compact_edges.size() == 3);
  }
}

TEST_CASE("ten-vertex hexagon: fan") {
  const auto model = oracle::fixture("hexagon_10");
  const auto fan = build_fan(model, special_theta(10));
  const std::vector<Point2> pts{{3, 0}, {3, 1}, {1, 3}, {0, 3}, {0, 2}, {2, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  REQUIRE(fan.num_rays() == 10);
  for (int r = 0; r < 10; ++r) CHECK(fan.rays[r].xy() == pts[r]);
  std::set<Cone> tris;
  for (const auto& t : fan.triangles) tris.insert(Cone(t.begin(), t.end()));
  const std::set<Cone> expected{cone_of({1, 2, 9}), cone_of({1, 6, 9}), cone_of({2, 9, 10}), cone_of({3, 4, 8}),
                                cone_of({3, 8, 10}), cone_of({4, 5, 8}), cone_of({5, 7, 8}), cone_of({6, 7, 9}),
                                cone_of({7, 8, 9}), cone_of({8, 9, 10})};
  CHECK(tris == expected);
  CHECK(fan.compact_rays == std::vector<int>{7, 8});
  CHECK(fan.compact_edges.size() == 11);
}

TEST_CASE("non-generic parameters are rejected") {
  const auto model = oracle::fixture("conifold");
  StabilityParam zero{{0, 0}};
  try {
    build_fan(model, zero);
    FAIL("accepted a non-generic parameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGeneric);
    CHECK(std::string(e.what()).find("non-generic stability parameter") != std::string::npos);
  }
}

TEST_CASE("the opposite special parameter gives the flopped conifold") {
  const auto model = oracle::fixture("conifold");
  const auto a = build_fan(model, special_theta(2));
  const auto b = build_fan(model, -special_theta(2));
  REQUIRE(a.compact_edges.size() == 1);
  REQUIRE(b.compact_edges.size() == 1);
  const auto ea = a.compact_edges[0], eb = b.compact_edges[0];
  const std::set<Point2> da{a.rays[ea[0]].xy(), a.rays[ea[1]].xy()}, db{b.rays[eb[0]].xy(), b.rays[eb[1]].xy()};
  CHECK(da != db);
}

TEST_CASE("torus-fixed modules satisfy the relations and are stable") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto model = oracle::fixture(name);
    const auto theta = special_theta(model.num_vertices);
    const auto fan = build_fan(model, theta);
    for (const auto& t : fan.triangles) {
      const auto mod = orbit_module(model, fan, Cone(t.begin(), t.end()));
      CHECK(satisfies_relations(model, mod.nonzero));
      std::vector<int> cos;
      for (int a = 0; a < model.num_arrows(); ++a)
        if (!mod.nonzero[a]) cos.push_back(a);
      CHECK(oracle::brute_force_stability(model, cos, theta) == Stability::Stable);
      for (int j = 0; j < model.num_vertices; ++j) {
        const auto path = chart_section_path(model, fan, t, j);
        int at = 0;
        for (int a : path) {
          CHECK(mod.nonzero[a]);
          CHECK(model.arrows[a].tail == at);
          at = model.arrows[a].head;
        }
        CHECK(at == j);
      }
    }
  }
}

TEST_CASE("ten-vertex hexagon: socles") {
  const auto model = oracle::fixture("hexagon_10");
  const auto fan = build_fan(model, special_theta(10));
  const auto mod = orbit_module(model, fan, cone_of({1, 2, 9}));
  CHECK(socle_vertices(model, mod) == std::vector<int>{2, 7});
  for (const auto& t : fan.triangles) {
    const auto s = socle_vertices(model, orbit_module(model, fan, Cone(t.begin(), t.end())));
    CHECK(std::find(s.begin(), s.end(), 2) != s.end());
  }
}

TEST_CASE("fibres over the origin") {
  auto fibre = [](const std::string& name) {
    const auto model = oracle::fixture(name);
    return origin_fibre(model, build_fan(model, special_theta(model.num_vertices)));
  };
  const auto c3 = fibre("one_vertex");
  CHECK(c3.F2.empty());
  CHECK(c3.F1.empty());
  CHECK(c3.F0.size() == 1);
  CHECK(c3.equidimensional);
  const auto con = fibre("conifold");
  CHECK(con.F2.empty());
  CHECK(con.F1.size() == 1);
  CHECK(con.equidimensional);
  const auto z3 = fibre("hexagonal_z3");
  CHECK(z3.F2.size() == 1);
  CHECK(z3.F1.empty());
  const auto f3 = fibre("hexagon_10");
  CHECK(f3.F2 == std::vector<int>{7, 8});
  CHECK(f3.F1.empty());
  CHECK(f3.equidimensional);
}

TEST_CASE("orbit modules reject non-cones") {
  const auto model = oracle::fixture("hexagon_10");
  const auto fan = build_fan(model, special_theta(10));
  CHECK_THROWS_AS(orbit_module(model, fan, cone_of({1, 3})), Error);
}

}
