#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greedylab {

std::vector<IndexSet> greedy_sets(const SparseVector& x, int m, double t, std::size_t cap) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in (0, 1]");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<int> supp = x.support();
  if (m > static_cast<int>(supp.size()))
    throw std::invalid_argument("m exceeds the support size");

  // Sort support by modulus descending (index ascending on ties) so that the
  // minimum over a chosen combination is its last element.
  std::sort(supp.begin(), supp.end(), [&x](int a, int b) {
    double va = std::abs(x.coeff(a)), vb = std::abs(x.coeff(b));
    if (va != vb) return va > vb;
    return a < b;
  });

  std::vector<IndexSet> out;
  if (m == 0) {
    // min over the empty set is +inf, so the empty set always qualifies
    out.emplace_back();
    return out;
  }

  const int n = static_cast<int>(supp.size());
  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  for (;;) {
    double min_in = std::abs(x.coeff(supp[comb[m - 1]]));
    double max_out = 0.0;
    {
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (c < m && comb[c] == i) {
          ++c;
          continue;
        }
        max_out = std::abs(x.coeff(supp[i]));  // first unchosen has the largest modulus
        break;
      }
    }
    if (min_in >= t * max_out) {
      std::vector<int> elems;
      elems.reserve(m);
      for (int c : comb) elems.push_back(supp[c]);
      out.emplace_back(std::move(elems));
      if (out.size() > cap) throw std::runtime_error("greedy set enumeration exceeds cap");
    }
    // next combination
    int i = m - 1;
    while (i >= 0 && comb[i] == n - m + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GreedyOutcome worst_greedy_ratio(const Space& space, const SparseVector& x, int m, double t,
                                 std::size_t cap) {
  if (x.is_zero()) throw std::invalid_argument("worst_greedy_ratio requires x != 0");
  double nx = space.norm(x);
  GreedyOutcome best;
  bool have = false;
  for (const auto& a : greedy_sets(x, m, t, cap)) {
    SparseVector pa = project(x, a);
    double r = space.norm(pa) / nx;
    if (!have || r > best.ratio + 1e-15) {
      best = {a, pa, r};
      have = true;
    }
  }
  if (!have) throw std::logic_error("no t-greedy set found (impossible for m <= |supp|)");
  return best;
}

}  // namespace greedylab
