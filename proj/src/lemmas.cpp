#include "greedylab/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greedylab {

namespace {
constexpr double kTol = 1e-9;
}

NormingFunctional norming_at(const Space& space, const SparseVector& x, int probes) {
  if (x.is_zero()) throw std::invalid_argument("norming functional requires x != 0");
  NormingFunctional nf;
  nf.f = space.norming(x);
  nf.at = x;
  nf.norm_at = space.norm(x);
  double fx = nf.f.dot(x);
  if (std::abs(fx - nf.norm_at) > kTol * std::max(1.0, nf.norm_at))
    throw std::runtime_error("norming functional does not attain the norm");
  // dual-norm spot checks on coordinate probes around the support of f
  std::vector<int> idx = nf.f.support();
  if (static_cast<int>(idx.size()) > probes) idx.resize(probes);
  auto check = [&](const SparseVector& y) {
    double ny = space.norm(y);
    if (std::abs(nf.f.dot(y)) > (1.0 + kTol) * ny + kTol)
      throw std::runtime_error("norming functional exceeds the dual ball on a probe");
  };
  for (std::size_t i = 0; i < idx.size(); ++i) {
    SparseVector ei;
    ei.set(idx[i], 1.0);
    check(ei);
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      SparseVector ej;
      ej.set(idx[j], 1.0);
      check(ei + ej);
      check(ei - ej);
    }
  }
  return nf;
}

json SubsetSelection::to_json() const {
  json j;
  j["small_case"] = small_case;
  j["max_partial"] = max_partial;
  j["bound"] = bound;
  j["D"] = D;
  if (!small_case) {
    j["l"] = l;
    j["B"] = B;
    j["y_star"] = y_star.to_json();
    j["sum_B_norm"] = sum_B_norm;
  }
  return j;
}

SubsetSelection select_subset(const Space& space, const std::vector<SparseVector>& xs,
                              const GapSequence& n, std::int64_t l) {
  const int r = static_cast<int>(xs.size());
  if (r < 1 || r > 22) throw std::invalid_argument("family size must lie in [1, 22]");
  if (l < 1) throw std::invalid_argument("quotient bound l must be positive");

  // exact maximizer over all partial sums; ties resolve to the lowest mask
  double best = 0.0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    SparseVector s;
    for (int j = 0; j < r; ++j)
      if (mask & (1u << j)) s = s + xs[j];
    double v = s.is_zero() ? 0.0 : space.norm(s);
    if (v > best) {
      best = v;
      best_mask = mask;
    }
  }
  SubsetSelection sel;
  sel.max_partial = best;
  for (int j = 0; j < r; ++j)
    if (best_mask & (1u << j)) sel.D.push_back(j);
  const std::int64_t dsize = static_cast<std::int64_t>(sel.D.size());

  if (dsize < n.n1()) {
    sel.small_case = true;
    double mx = 0.0;
    for (const auto& x : xs) mx = std::max(mx, x.is_zero() ? 0.0 : space.norm(x));
    sel.bound = static_cast<double>(n.n1() - 1) * mx;
  } else {
    SparseVector sum_d;
    for (int j : sel.D) sum_d = sum_d + xs[j];
    NormingFunctional nf = norming_at(space, sum_d);
    sel.y_star = nf.f;
    std::vector<std::pair<double, int>> scored;
    for (int j : sel.D) {
      double v = nf.f.dot(xs[j]);
      if (v < -kTol * std::max(1.0, nf.norm_at))
        throw std::runtime_error("norming functional is negative on a member of the maximizer");
      scored.emplace_back(v, j);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    int k = n.k0_below(dsize + 1);  // largest k with n_k <= |D|
    std::int64_t bsize = n.at(k);
    if (dsize > l * bsize)
      throw std::invalid_argument("l does not dominate the quotient gaps at the selected scale");
    for (std::int64_t i = 0; i < bsize; ++i) sel.B.push_back(scored[i].second);
    std::sort(sel.B.begin(), sel.B.end());
    SparseVector sum_b;
    for (int j : sel.B) sum_b = sum_b + xs[j];
    sel.sum_B_norm = space.norm(sum_b);
    sel.l = l;
    sel.bound = static_cast<double>(l) * sel.sum_B_norm;
  }
  if (sel.max_partial > sel.bound + kTol * std::max(1.0, sel.bound))
    throw std::runtime_error("selection certificate failed");
  return sel;
}

json SignedSubsetSelection::to_json() const {
  json j;
  j["inner"] = inner.to_json();
  j["max_signed"] = max_signed;
  j["bound"] = bound;
  return j;
}

SignedSubsetSelection select_subset_signed(const Space& space,
                                           const std::vector<SparseVector>& xs,
                                           const std::vector<int>& b, const GapSequence& n,
                                           std::int64_t l) {
  const int r = static_cast<int>(xs.size());
  if (r < 1 || r > 22) throw std::invalid_argument("family size must lie in [1, 22]");
  if (static_cast<int>(b.size()) != r) throw std::invalid_argument("sign vector size mismatch");
  for (int s : b)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");

  std::vector<SparseVector> ys(r);
  for (int j = 0; j < r; ++j) ys[j] = xs[j] * static_cast<double>(b[j]);

  SignedSubsetSelection out;
  out.inner = select_subset(space, ys, n, l);
  // max over |a_j| <= 1 is attained at a sign vector by convexity
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    SparseVector s;
    for (int j = 0; j < r; ++j) s = s + xs[j] * ((mask & (1u << j)) ? -1.0 : 1.0);
    if (!s.is_zero()) best = std::max(best, space.norm(s));
  }
  out.max_signed = best;
  out.bound = 2.0 * FieldConfig::kappa * out.inner.bound;
  if (out.max_signed > out.bound + kTol * std::max(1.0, out.bound))
    throw std::runtime_error("signed selection certificate failed");
  return out;
}

}  // namespace greedylab
