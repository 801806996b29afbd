#include "dimer/rational_lp.hpp"

#include <stdexcept>

namespace dimer {

LpResult maximize(const LinearProgram& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw std::invalid_argument("LP: b has wrong length");
  for (const auto& row : lp.A)
    if (row.size() != n) throw std::invalid_argument("LP: row has wrong length");
  for (const auto& v : lp.b)
    if (v < 0) throw std::invalid_argument("LP: origin must be feasible");

  // Dictionary: basic[r] = d[r][0] + sum_j d[r][j+1] * nonbasic[j].
  std::vector<std::size_t> nonbasic(n), basic(m);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t r = 0; r < m; ++r) basic[r] = n + r;
  std::vector<std::vector<Rational>> d(m, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    d[r][0] = lp.b[r];
    for (std::size_t j = 0; j < n; ++j) d[r][j + 1] = -lp.A[r][j];
  }
  std::vector<Rational> z(n + 1);
  for (std::size_t j = 0; j < n; ++j) z[j + 1] = lp.c[j];

  LpResult res;
  while (true) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (z[j + 1] > 0 && (enter == n || nonbasic[j] < nonbasic[enter])) enter = j;
    if (enter == n) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (d[r][enter + 1] >= 0) continue;
      Rational ratio = d[r][0] / -d[r][enter + 1];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basic[r] < basic[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      res.unbounded = true;
      return res;
    }

    // Solve row `leave` for the entering variable; the freed column then
    // refers to the leaving variable.
    const Rational coef = d[leave][enter + 1];
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j <= n; ++j) row[j] = d[leave][j] / -coef;
    row[enter + 1] = Rational(1) / coef;

    auto substitute = [&](std::vector<Rational>& target) {
      const Rational t = target[enter + 1];
      if (t == 0) return;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == enter + 1)
          target[j] = t * row[j];
        else
          target[j] += t * row[j];
      }
    };
    for (std::size_t r = 0; r < m; ++r)
      if (r != leave) substitute(d[r]);
    substitute(z);
    d[leave] = row;
    std::swap(basic[leave], nonbasic[enter]);
  }

  res.value = z[0];
  res.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basic[r] < n) res.x[basic[r]] = d[r][0];
  return res;
}

}  // namespace dimer
