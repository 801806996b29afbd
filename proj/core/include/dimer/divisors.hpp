#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dimer/dimer_core.hpp"
#include "dimer/lattice.hpp"
#include "dimer/moduli_fan.hpp"

namespace dimer {

struct TorusDivisor {
  std::vector<long> coeffs;  // indexed by ray

  TorusDivisor() = default;
  explicit TorusDivisor(int num_rays) : coeffs(num_rays, 0) {}
  static TorusDivisor prime(int num_rays, int rho);

  bool effective() const;
  bool is_zero() const;
  std::vector<int> support() const;
  bool operator==(const TorusDivisor&) const = default;
};

TorusDivisor operator+(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor operator-(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor operator-(const TorusDivisor& a);

TorusDivisor lcm(const std::vector<TorusDivisor>& ds);
TorusDivisor gcd(const std::vector<TorusDivisor>& ds);
// a - b, rejecting a negative result.
TorusDivisor difference(const TorusDivisor& a, const TorusDivisor& b);
bool contains(int rho, const TorusDivisor& d);

// Compact notation with 1-based ray indices, e.g. "E3+E4".
std::string to_string(const TorusDivisor& d);

TorusDivisor arrow_label(const DimerModel& model, const Fan& fan, int a);
std::vector<TorusDivisor> arrow_labels(const DimerModel& model, const Fan& fan);
TorusDivisor path_label(const DimerModel& model, const Fan& fan, const WeakPath& p);

// Principal divisors: rows m -> (<n_rho, m>)_rho for m in {x, y, z}.
class PrincipalLattice {
 public:
  explicit PrincipalLattice(const Fan& fan);
  bool contains(const TorusDivisor& d) const;
  const IntegerLattice& lattice() const { return lattice_; }

 private:
  IntegerLattice lattice_;
};

struct LineBundleClass {
  TorusDivisor representative;
};

bool same_class(const PrincipalLattice& principal, const LineBundleClass& a, const LineBundleClass& b);

// Weak path from 0 to i found by breadth-first search in the double quiver.
WeakPath weak_path_to(const DimerModel& model, int i);
LineBundleClass line_bundle_class(const DimerModel& model, const Fan& fan, int i);

// Minimal cones sigma such that every divisor meets sigma; each such cone is
// an irreducible component V(sigma) of the common zero locus.
std::vector<Cone> common_zero_support(const Fan& fan, const std::vector<TorusDivisor>& divisors);

struct CurveData {
  Edge edge{};                  // (v1, v2)
  std::array<int, 2> opposite{};  // (u1, u2)
  std::vector<long> intersection;  // E_rho . C for every ray
};

CurveData curve_intersection_data(const Fan& fan, Edge edge);
long bundle_degree_on_curve(const LineBundleClass& cls, const CurveData& curve);
bool is_minus1_minus1(const Fan& fan, const CurveData& curve);

}  // namespace dimer
