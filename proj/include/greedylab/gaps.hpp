#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace greedylab {

using json = nlohmann::json;

enum class GapRuleKind { None, Geometric, Arithmetic, DoubleExponential };

/// Strictly increasing sequence n = (n_k) of positive integers, stored as an
/// explicit prefix plus an optional generating rule for on-demand extension.
class GapSequence {
 public:
  GapSequence() = default;
  GapSequence(std::vector<std::int64_t> prefix, GapRuleKind rule = GapRuleKind::None,
              std::int64_t param = 0);

  // Convenience: n = N (all positive integers), realized as prefix {1} + step-1 rule.
  static GapSequence all_integers();

  // k is 1-based per the usual indexing n_1, n_2, ...
  std::int64_t at(int k) const;

  // Number of terms representable without overflow, capped at `cap` terms.
  int terms_available(int cap = 64) const;
  bool has_rule() const { return rule_ != GapRuleKind::None; }
  const std::vector<std::int64_t>& prefix() const { return prefix_; }
  std::int64_t n1() const;

  // Largest k with n_k < m. Requires m > n_1.
  int k0_below(std::int64_t m) const;

  // Whether m appears in the sequence (extends via the rule as needed).
  bool member(std::int64_t m) const;

  // All sequence values in [1, hi], ascending.
  std::vector<std::int64_t> values_up_to(std::int64_t hi) const;

  json to_json() const;
  static GapSequence from_json(const json& j);

 private:
  std::int64_t term(int k) const;  // 1-based, throws past the horizon

  std::vector<std::int64_t> prefix_;
  GapRuleKind rule_ = GapRuleKind::None;
  std::int64_t param_ = 0;
};

/// Exact bounds over an inspected prefix. A finite prefix can certify
/// l-boundedness on that range only; the trend flags are advisory.
struct GapClassification {
  std::int64_t quotient_bound = 1;  // least integer l with n_{k+1} <= l n_k, k < K
  std::int64_t additive_bound = 0;  // max of n_{k+1} - n_k, k < K
  bool quotient_trend_unbounded = false;
  bool additive_trend_unbounded = false;
  int inspected_horizon = 0;

  json to_json() const;
};

// Inspects n_1..n_K. Requires K >= 2 and that many terms available.
GapClassification classify(const GapSequence& n, int K);

}  // namespace greedylab
