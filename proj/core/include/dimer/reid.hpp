#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimer/divisors.hpp"
#include "dimer/moduli_fan.hpp"

namespace dimer {

// Labels of the wheel at vertex i.  Index j is 0-based here; the j-th entry
// corresponds to the 1-based index j+1 used in the literature.
//   in_spokes[j]   = D^j        label of a_j
//   out_spokes[j]  = D_{j,j+1}  label of b_j
//   rim_to_a[j]    = D^{j+1}_j  from t(b_j) to h(a_j)
//   rim_to_next[j] = D^j_{j+1}  from t(b_j) to h(a_{j+1})
struct Wheel {
  Rotation rotation;
  std::vector<TorusDivisor> in_spokes;
  std::vector<TorusDivisor> out_spokes;
  std::vector<TorusDivisor> rim_to_a;
  std::vector<TorusDivisor> rim_to_next;

  int vertex() const { return rotation.vertex; }
  int m() const { return rotation.m(); }
  // 1-based cyclic accessors.
  const TorusDivisor& D(int j) const;
  const TorusDivisor& out(int j) const;
  const TorusDivisor& rim_a(int j) const;
  const TorusDivisor& rim_next(int j) const;
};

Wheel build_wheel(const DimerModel& model, const Fan& fan, int i);
Wheel build_wheel(const DimerModel& model, const Fan& fan, const Rotation& rotation);

bool wheel_relations_hold(const Wheel& w);
bool one_of_three_holds(const Wheel& w, int rho);

std::vector<Cone> h0_support(const Wheel& w, const Fan& fan);
std::vector<Cone> h0_support_socle(const DimerModel& model, const Fan& fan, int i);
TorusDivisor h2_divisor(const Wheel& w);

std::vector<std::pair<int, int>> transposition_order(int m);

// Union of the common zero loci Z_j(i) over the filtration, as minimal cones.
std::vector<Cone> hminus1_filtration(const Wheel& w, const Fan& fan);
// Compact prime divisors satisfying the per-divisor criterion.
std::vector<int> hminus1_criterion(const Wheel& w, const Fan& fan);
// Both routes, required to agree; components must be compact divisors.
std::vector<int> hminus1_support(const Wheel& w, const Fan& fan);

bool vanishing_pattern_holds(const Wheel& w, int rho);

struct Chamber {
  std::vector<VertexSet> inequalities;  // theta(S) > 0
  int num_vertices = 0;
  int dimension() const { return num_vertices - 1; }
  bool contains(const StabilityParam& theta) const;
};

enum class WallType { None, Type0, TypeI };
std::string to_string(WallType t);

struct WallInfo {
  int vertex = 0;
  bool socle_route = false;
  bool facet_route = false;
  WallType type = WallType::None;
  std::vector<Cone> unstable_locus;
};

struct ChamberWalls {
  Chamber chamber;
  std::vector<WallInfo> walls;  // one per nonzero vertex
};

Chamber build_chamber(const DimerModel& model, const Fan& fan);
// Exact LP test that the closure of the chamber meets theta_i = 0 in a facet.
bool facet_on_vertex_hyperplane(const Chamber& chamber, int i);
ChamberWalls chamber_and_walls(const DimerModel& model, const Fan& fan, const StabilityParam& theta);

bool verify_flop_degrees(const DimerModel& model, const Fan& fan, int i, const CurveData& curve);

enum class PsiCase { Div0, Curve0, SheafMinus1, Dualizing };
std::string to_string(PsiCase c);

struct PsiChecks {
  std::optional<bool> relations;
  std::optional<bool> one_of_three;
  std::optional<bool> h2_zero;
  std::optional<bool> exclusivity;
  std::optional<bool> connectivity;
  std::optional<bool> dimension2;
  std::optional<bool> flop_degrees;
  std::optional<bool> socle_eq_facet;
  std::optional<bool> vanishing_pattern;
  std::optional<bool> h2_matches_f2;

  bool all_pass() const;
};

struct PsiEntry {
  int vertex = 0;
  PsiCase kind = PsiCase::SheafMinus1;
  std::vector<Cone> support;
  std::optional<TorusDivisor> bundle;  // representative of L_i^{-1}
  bool wall = false;
  WallType wall_type = WallType::None;
  std::vector<int> hminus1;  // compact divisors, vertices i != 0
  std::optional<OriginFibre> fibre;
  bool pure = false;
  PsiChecks checks;
  std::vector<std::string> failures;

  std::string formula() const;
};

struct PsiReport {
  std::vector<PsiEntry> entries;  // indexed by vertex
  bool all_checks_pass() const;
  std::vector<std::string> failures() const;
};

struct ZeroVertexReport {
  OriginFibre fibre;
  std::vector<int> h2_support;   // rays of the gcd of the out-spokes at 0
  std::vector<int> hminus2;      // = F2
  std::vector<Edge> hminus1;     // = F1
  bool pure = false;
  bool h2_matches_f2 = false;
};

ZeroVertexReport psi_zero_vertex(const DimerModel& model, const Fan& fan);

// Records every check in the report; classify_psi throws if any fails.
PsiReport classify_psi_unchecked(const DimerModel& model, const Fan& fan);
PsiReport classify_psi(const DimerModel& model, const Fan& fan);

struct OppositeComparison {
  bool same_rays = false;
  bool same_triangles = false;
  bool points_reflected = false;
  bool equal() const { return same_rays && same_triangles && points_reflected; }
};

OppositeComparison compare_with_opposite(const DimerModel& model);
bool opposite_dimer_check(const DimerModel& model);

}  // namespace dimer
