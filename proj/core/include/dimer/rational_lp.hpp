#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dimer {

using Rational = boost::multiprecision::cpp_rational;

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so that the origin is
// feasible.  Exact simplex with Bland's rule.
struct LinearProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpResult {
  bool unbounded = false;
  Rational value = 0;
  std::vector<Rational> x;
};

LpResult maximize(const LinearProgram& lp);

}  // namespace dimer
