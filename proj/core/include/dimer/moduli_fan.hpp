#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimer/dimer_core.hpp"
#include "dimer/matchings.hpp"
#include "dimer/rational_lp.hpp"

namespace dimer {

struct StabilityParam {
  std::vector<Rational> theta;
};

// (1 - |Q0|, 1, ..., 1)
StabilityParam special_theta(int num_vertices);
StabilityParam operator-(const StabilityParam& t);
bool is_special(const StabilityParam& t);

enum class Stability { Stable, SemistableNotStable, Unstable, RelationViolating };
std::string to_string(Stability s);

// Vertex subsets are bitmasks over Q0.
using VertexSet = std::uint64_t;
constexpr int kMaxVertices = 24;

// Proper nonempty vertex subsets closed under the given nonzero arrows.
std::vector<VertexSet> closed_subsets(const DimerModel& model, const std::vector<char>& nonzero);

bool satisfies_relations(const DimerModel& model, const std::vector<char>& nonzero);

Stability is_stable_cosupport(const DimerModel& model, const std::vector<int>& cosupport, const StabilityParam& theta);

std::vector<PerfectMatching> stable_matchings(const DimerModel& model, const std::vector<PerfectMatching>& matchings,
                                              const StabilityParam& theta);

using Cone = std::vector<int>;  // sorted 0-based ray indices
using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;

struct Fan {
  std::vector<MatchingPoint> rays;
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;
  std::vector<int> compact_rays;
  std::vector<Edge> compact_edges;
  Polygon polygon;

  int num_rays() const { return static_cast<int>(rays.size()); }
  std::vector<Cone> cones() const;
  bool is_cone(const Cone& c) const;
  bool is_compact_ray(int r) const;
  bool is_compact_edge(Edge e) const;
  std::vector<int> triangles_with_edge(Edge e) const;
};

Fan build_fan(const DimerModel& model, const std::vector<PerfectMatching>& matchings, const HomologyBasis& basis,
              const StabilityParam& theta, std::optional<Point2> anchor = std::nullopt);

// Enumerates matchings and the homology basis itself; uses the model's anchor.
Fan build_fan(const DimerModel& model, const StabilityParam& theta);

struct TorusInvariantModule {
  Cone cone;
  std::vector<char> nonzero;  // indexed by arrow id

  std::vector<int> nonzero_arrows() const;
};

TorusInvariantModule orbit_module(const DimerModel& model, const Fan& fan, const Cone& cone);

std::vector<int> socle_vertices(const DimerModel& model, const TorusInvariantModule& module);

struct OriginFibre {
  std::vector<Cone> orbits;      // every cone whose orbit lies over the origin
  std::vector<Cone> components;  // minimal such cones, i.e. irreducible components
  std::vector<int> F2;           // rays of the 2-dimensional components
  std::vector<Edge> F1;          // edges of the 1-dimensional components
  std::vector<Triangle> F0;      // isolated torus-fixed points
  bool equidimensional = true;
};

OriginFibre origin_fibre(const DimerModel& model, const Fan& fan);

// Path of arrows from 0 to j that are nonzero on the module of the triangle.
std::vector<int> chart_section_path(const DimerModel& model, const Fan& fan, const Triangle& triangle, int j);

}  // namespace dimer
