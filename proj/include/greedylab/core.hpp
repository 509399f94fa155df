#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace greedylab {

using json = nlohmann::json;

/// Real scalars only; kappa = 1 throughout.
struct FieldConfig {
  static constexpr int kappa = 1;
};

/// Finitely supported real coefficient sequence indexed by positive integers.
/// Canonical form: no stored entry is exactly zero.
class SparseVector {
 public:
  SparseVector() = default;

  // Throws on duplicate or non-positive indices. Zeros are dropped.
  static SparseVector from_pairs(const std::vector<std::pair<int, double>>& pairs);

  double coeff(int i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0.0 : it->second;
  }

  // Sets a coefficient, keeping canonical form.
  void set(int i, double v);

  const std::map<int, double>& entries() const { return entries_; }
  std::vector<int> support() const;
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  int max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  double linf_norm() const;
  double l1_norm() const;
  double l2_norm() const;

  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;
  SparseVector operator*(double t) const;
  bool operator==(const SparseVector& o) const { return entries_ == o.entries_; }

  // Sum of f_i * x_i over the common support.
  double dot(const SparseVector& o) const;

  json to_json() const;
  static SparseVector from_json(const json& j);

 private:
  std::map<int, double> entries_;
};

/// Finite sorted set of positive integers.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> elems);

  const std::vector<int>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(int i) const;
  int min() const;
  int max() const;

  // A < B in the paper's sense: max A < min B. Empty sets compare true.
  static bool strictly_before(const IndexSet& a, const IndexSet& b);

  // Throws if the sets overlap.
  static IndexSet disjoint_union(const IndexSet& a, const IndexSet& b);

  static IndexSet set_union(const IndexSet& a, const IndexSet& b);
  bool is_subset_of(const IndexSet& b) const;
  bool disjoint_from(const IndexSet& b) const;

  bool operator==(const IndexSet& o) const { return elems_ == o.elems_; }
  bool operator<(const IndexSet& o) const { return elems_ < o.elems_; }

  json to_json() const;
  static IndexSet from_json(const json& j);

 private:
  std::vector<int> elems_;  // sorted, unique, positive
};

/// Sign pattern over a domain: each index maps to -1 or +1.
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(IndexSet domain, std::vector<int> signs);

  static SignPattern all_plus(const IndexSet& domain);
  // Alternating signs in index order, starting with `first` (+1 or -1).
  static SignPattern alternating(const IndexSet& domain, int first = 1);
  // Signs from the k-th bit pattern (bit j set => -1 on the j-th element).
  static SignPattern from_mask(const IndexSet& domain, unsigned long long mask);

  const IndexSet& domain() const { return domain_; }
  int sign(int i) const;
  const std::vector<int>& signs() const { return signs_; }

  // Restriction to a subset of the domain (paper's natural restriction).
  SignPattern restrict_to(const IndexSet& sub) const;

  json to_json() const;

 private:
  IndexSet domain_;
  std::vector<int> signs_;  // aligned with domain_.elements()
};

// 1_{eps A} = sum over n in A of eps_n e_n. Throws if eps.domain != A.
SparseVector indicator(const IndexSet& a, const SignPattern& eps);
SparseVector indicator(const IndexSet& a);  // all-plus

// P_A(x): coefficients of x on A, zero elsewhere.
SparseVector project(const SparseVector& x, const IndexSet& a);

// S_m(x) = P_{1..m}(x). Requires m >= 0.
SparseVector partial_sum(const SparseVector& x, int m);

}  // namespace greedylab
