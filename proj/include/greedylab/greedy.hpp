#pragma once

#include <vector>

#include "greedylab/core.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

struct GreedyOutcome {
  IndexSet set;
  SparseVector sum;  // P_A x
  double ratio = 0.0;
};

// All A subset of supp(x) with |A| = m and min_{i in A}|a_i| >= t max_{i not in A}|a_i|.
// Ties are kept; more than `cap` qualifying sets is an error.
std::vector<IndexSet> greedy_sets(const SparseVector& x, int m, double t, std::size_t cap = 100000);

// The t-greedy set of size m maximizing ||P_A x|| / ||x||.
GreedyOutcome worst_greedy_ratio(const Space& space, const SparseVector& x, int m, double t,
                                 std::size_t cap = 100000);

}  // namespace greedylab
