#include "greedylab/gaps.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace greedylab {

namespace {

constexpr std::int64_t kHorizon = std::int64_t{1} << 62;

std::int64_t checked_next(GapRuleKind rule, std::int64_t param, std::int64_t last) {
  switch (rule) {
    case GapRuleKind::Geometric:
      if (param < 2) throw std::invalid_argument("geometric ratio must be >= 2");
      if (last > kHorizon / param) throw std::overflow_error("gap sequence beyond horizon");
      return last * param;
    case GapRuleKind::Arithmetic:
      if (param < 1) throw std::invalid_argument("arithmetic step must be >= 1");
      if (last > kHorizon - param) throw std::overflow_error("gap sequence beyond horizon");
      return last + param;
    case GapRuleKind::DoubleExponential:
      // n_{k+1} = n_k^2, the shape of (2^(2^k))
      if (last > std::int64_t{3037000499}) throw std::overflow_error("gap sequence beyond horizon");
      return last * last;
    case GapRuleKind::None:
      throw std::out_of_range("gap sequence exhausted (no extension rule)");
  }
  throw std::logic_error("unreachable");
}

std::string kind_name(GapRuleKind k) {
  switch (k) {
    case GapRuleKind::None: return "none";
    case GapRuleKind::Geometric: return "geometric";
    case GapRuleKind::Arithmetic: return "arithmetic";
    case GapRuleKind::DoubleExponential: return "double-exponential";
  }
  return "none";
}

GapRuleKind kind_from_name(const std::string& s) {
  if (s == "none") return GapRuleKind::None;
  if (s == "geometric") return GapRuleKind::Geometric;
  if (s == "arithmetic") return GapRuleKind::Arithmetic;
  if (s == "double-exponential") return GapRuleKind::DoubleExponential;
  throw std::invalid_argument("unknown gap rule kind: " + s);
}

}  // namespace

GapSequence::GapSequence(std::vector<std::int64_t> prefix, GapRuleKind rule, std::int64_t param)
    : prefix_(std::move(prefix)), rule_(rule), param_(param) {
  if (prefix_.empty()) throw std::invalid_argument("gap sequence prefix must be nonempty");
  if (prefix_.front() < 1) throw std::invalid_argument("gap sequence terms must be positive");
  for (std::size_t k = 1; k < prefix_.size(); ++k)
    if (prefix_[k] <= prefix_[k - 1])
      throw std::invalid_argument("gap sequence must be strictly increasing");
  if (rule_ != GapRuleKind::None) {
    // The rule must continue the prefix consistently, i.e. produce something larger.
    std::int64_t next = checked_next(rule_, param_, prefix_.back());
    if (next <= prefix_.back())
      throw std::invalid_argument("gap rule does not extend the prefix");
  }
}

GapSequence GapSequence::all_integers() {
  return GapSequence({1}, GapRuleKind::Arithmetic, 1);
}

std::int64_t GapSequence::term(int k) const {
  if (k < 1) throw std::invalid_argument("gap index must be >= 1");
  if (k <= static_cast<int>(prefix_.size())) return prefix_[k - 1];
  std::int64_t v = prefix_.back();
  for (int j = static_cast<int>(prefix_.size()); j < k; ++j) v = checked_next(rule_, param_, v);
  return v;
}

std::int64_t GapSequence::at(int k) const { return term(k); }

int GapSequence::terms_available(int cap) const {
  if (rule_ == GapRuleKind::None) return std::min<int>(cap, static_cast<int>(prefix_.size()));
  int count = static_cast<int>(prefix_.size());
  std::int64_t v = prefix_.back();
  while (count < cap) {
    try {
      v = checked_next(rule_, param_, v);
    } catch (const std::overflow_error&) {
      break;
    }
    ++count;
  }
  return count;
}

std::int64_t GapSequence::n1() const { return prefix_.front(); }

int GapSequence::k0_below(std::int64_t m) const {
  if (m <= n1()) throw std::invalid_argument("k0_below requires m > n_1");
  int k = 1;
  for (;;) {
    std::int64_t next;
    try {
      next = term(k + 1);
    } catch (const std::out_of_range&) {
      return k;  // no further terms; everything known is < m
    } catch (const std::overflow_error&) {
      return k;
    }
    if (next >= m) return k;
    ++k;
  }
}

bool GapSequence::member(std::int64_t m) const {
  if (m < 1) throw std::invalid_argument("member requires m >= 1");
  for (std::int64_t v : prefix_) {
    if (v == m) return true;
    if (v > m) return false;
  }
  if (rule_ == GapRuleKind::None)
    throw std::out_of_range("membership query beyond prefix with no extension rule");
  std::int64_t v = prefix_.back();
  while (v < m) {
    try {
      v = checked_next(rule_, param_, v);
    } catch (const std::overflow_error&) {
      throw std::out_of_range("membership query beyond representable horizon");
    }
  }
  return v == m;
}

std::vector<std::int64_t> GapSequence::values_up_to(std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t v : prefix_) {
    if (v > hi) return out;
    out.push_back(v);
  }
  if (rule_ == GapRuleKind::None) return out;
  std::int64_t v = prefix_.back();
  for (;;) {
    try {
      v = checked_next(rule_, param_, v);
    } catch (const std::overflow_error&) {
      return out;
    }
    if (v > hi) return out;
    out.push_back(v);
  }
}

json GapSequence::to_json() const {
  json j;
  j["prefix"] = prefix_;
  j["rule"] = {{"kind", kind_name(rule_)}, {"param", param_}};
  return j;
}

GapSequence GapSequence::from_json(const json& j) {
  auto prefix = j.at("prefix").get<std::vector<std::int64_t>>();
  GapRuleKind kind = GapRuleKind::None;
  std::int64_t param = 0;
  if (j.contains("rule")) {
    kind = kind_from_name(j["rule"].at("kind").get<std::string>());
    if (j["rule"].contains("param")) param = j["rule"]["param"].get<std::int64_t>();
  }
  return GapSequence(std::move(prefix), kind, param);
}

json GapClassification::to_json() const {
  return json{{"quotient_bound", quotient_bound},
              {"additive_bound", additive_bound},
              {"quotient_trend_unbounded", quotient_trend_unbounded},
              {"additive_trend_unbounded", additive_trend_unbounded},
              {"inspected_horizon", inspected_horizon}};
}

GapClassification classify(const GapSequence& n, int K) {
  if (K < 2) throw std::invalid_argument("classify requires K >= 2");
  if (n.terms_available(K) < K) throw std::out_of_range("prefix too short for requested horizon");

  GapClassification c;
  c.inspected_horizon = K;
  std::vector<std::int64_t> quotients;  // ceil(n_{k+1} / n_k), exact integers
  std::vector<std::int64_t> diffs;
  for (int k = 1; k < K; ++k) {
    std::int64_t a = n.at(k), b = n.at(k + 1);
    quotients.push_back((b + a - 1) / a);
    diffs.push_back(b - a);
  }
  c.quotient_bound = *std::max_element(quotients.begin(), quotients.end());
  c.additive_bound = *std::max_element(diffs.begin(), diffs.end());

  // Trend heuristic: non-decreasing gap values whose last strictly exceeds the
  // first suggest (but cannot prove) arbitrarily large gaps.
  auto trending = [](const std::vector<std::int64_t>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
      if (v[k] < v[k - 1]) return false;
    return v.back() > v.front();
  };
  // Quotient trend uses the exact rationals n_{k+1}/n_k, compared by
  // cross-multiplication to avoid rounding.
  auto ratio_trending = [&n, K]() {
    bool grew = false;
    for (int k = 1; k + 1 < K; ++k) {
      // compare n_{k+2}/n_{k+1} vs n_{k+1}/n_k by exact cross-multiplication
      __int128 lhs = static_cast<__int128>(n.at(k + 2)) * n.at(k);
      __int128 rhs = static_cast<__int128>(n.at(k + 1)) * n.at(k + 1);
      if (lhs < rhs) return false;
      if (lhs > rhs) grew = true;
    }
    return grew;
  };
  c.additive_trend_unbounded = trending(diffs);
  c.quotient_trend_unbounded = K >= 3 && ratio_trending();
  return c;
}

}  // namespace greedylab
