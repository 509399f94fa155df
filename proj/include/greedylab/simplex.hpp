#pragma once

#include <vector>

namespace greedylab {

/// Result of maximizing c'x subject to Ax <= b, x >= 0.
struct LpResult {
  double value = 0.0;
  std::vector<double> x;  // primal optimum
  bool optimal = false;   // false means unbounded (infeasibility cannot occur
                          // here: callers only pose problems with b >= 0)
};

/// Dense primal simplex with Bland's rule. Intended for small problems
/// (a few hundred variables). Requires b >= 0 so the slack basis is feasible.
LpResult simplex_maximize(const std::vector<double>& c,
                          const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b);

}  // namespace greedylab
