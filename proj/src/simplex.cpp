#include "greedylab/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace greedylab {

// Standard tableau simplex. Columns 0..n-1 are the structural variables,
// n..n+m-1 the slacks; Bland's rule (lowest eligible index) guarantees
// termination without anti-cycling perturbation.
LpResult simplex_maximize(const std::vector<double>& c,
                          const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("row count mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("column count mismatch");
  for (double bi : b)
    if (bi < 0.0) throw std::invalid_argument("simplex_maximize requires b >= 0");

  const double eps = 1e-12;
  const std::size_t total = n + m;
  // tableau: m rows of [A | I | b], plus objective row [-c | 0 | 0]
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(total + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][total] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: entering = lowest index with negative reduced cost.
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == total) break;  // optimal

    // Ratio test, ties broken by lowest basis index (Bland).
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= eps) continue;
      double ratio = t[i][total] / t[i][enter];
      if (ratio < best - eps || (ratio < best + eps && (leave == m || basis[i] < basis[leave]))) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) {
      LpResult r;
      r.optimal = false;
      return r;  // unbounded
    }

    double piv = t[leave][enter];
    for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult r;
  r.optimal = true;
  r.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) r.x[basis[i]] = t[i][total];
  r.value = t[m][total];
  return r;
}

}  // namespace greedylab
