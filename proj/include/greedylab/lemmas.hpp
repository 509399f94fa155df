#pragma once

#include <cstdint>
#include <vector>

#include "greedylab/core.hpp"
#include "greedylab/gaps.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

/// A checked norming functional: f(at) = ||at|| and |f(y)| <= ||y|| on probes.
struct NormingFunctional {
  SparseVector f;
  SparseVector at;
  double norm_at = 0.0;
};

// Wraps space.norming(x) and validates both defining properties; throws if
// either fails beyond tolerance. `probes` bounds the dual-norm sample size.
NormingFunctional norming_at(const Space& space, const SparseVector& x, int probes = 8);

/// Outcome of the constructive selection: either the small case (the maximal
/// partial sum is already controlled by (n_1 - 1) max_j ||x_j||) or a subset
/// B of cardinality in n controlling it up to the quotient bound l.
struct SubsetSelection {
  bool small_case = false;
  double max_partial = 0.0;   // max over E of ||sum_{j in E} x_j||, exact
  double bound = 0.0;         // certified upper bound for max_partial
  std::int64_t l = 1;         // quotient bound used (subset case)
  std::vector<int> D;         // maximizing subset (positions into xs, 0-based)
  std::vector<int> B;         // selected subset of D (subset case)
  SparseVector y_star;        // norming functional at sum_D x_j (subset case)
  double sum_B_norm = 0.0;    // ||sum_{j in B} x_j|| (subset case)

  json to_json() const;
};

// Constructive selection for a finite family xs (at most 22 vectors): find the
// partial-sum maximizer D; if |D| < n_1 certify the small case, otherwise pick
// the n_{k0} positions of D with the largest y*-values, where n_{k0} is the
// last sequence term <= |D| and y* is norming at sum_D x_j. `l` must dominate
// the quotient gaps of n up to k0 + 1.
SubsetSelection select_subset(const Space& space, const std::vector<SparseVector>& xs,
                              const GapSequence& n, std::int64_t l);

/// Signed variant: controls max over |a_j| <= 1 of ||sum a_j x_j|| via the
/// selection applied to y_j = b_j x_j, at the cost of a factor 2 kappa.
struct SignedSubsetSelection {
  SubsetSelection inner;      // selection for (b_j x_j)
  double max_signed = 0.0;    // max over sign vectors of ||sum a_j x_j||, exact
  double bound = 0.0;         // 2 kappa * inner.bound

  json to_json() const;
};

SignedSubsetSelection select_subset_signed(const Space& space,
                                           const std::vector<SparseVector>& xs,
                                           const std::vector<int>& b, const GapSequence& n,
                                           std::int64_t l);

}  // namespace greedylab
