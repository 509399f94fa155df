#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greedylab/core.hpp"

namespace greedylab {

/// Norm oracle over finitely supported vectors with declared basis data.
/// norming(x) returns an exact subgradient f of the norm at x (f(x) = ||x||,
/// |f(y)| <= ||y||), extracted from the active branch of the max-of-branches
/// norm. Branch order is fixed for determinism: sum/linf, lp-block, prefix,
/// functional-class, l2/lq tail.
class Space {
 public:
  virtual ~Space() = default;

  virtual double norm(const SparseVector& x) const = 0;
  virtual SparseVector norming(const SparseVector& x) const = 0;
  virtual json to_json() const = 0;

  const std::string& name() const { return name_; }
  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  std::optional<double> schauder_constant() const { return schauder_; }
  int horizon() const { return horizon_; }

 protected:
  std::string name_;
  double alpha1_ = 1.0;
  double alpha2_ = 1.0;
  std::optional<double> schauder_;
  int horizon_ = 1 << 20;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Classical lp, p in [1, inf] (p = inf encoded as infinity()).
class LpSpace : public Space {
 public:
  explicit LpSpace(double p, int horizon = 1 << 20);
  double norm(const SparseVector& x) const override;
  SparseVector norming(const SparseVector& x) const override;
  json to_json() const override;
  double p() const { return p_; }

 private:
  double p_;
};

struct PqBlockParams {
  double p = 2.0;
  double q = 2.0;
  double epsilon = 0.5;
  double delta = 0.25;
  int m = 2;             // even block length
  bool strict = false;   // enforce the admissibility conditions below
  int horizon = 1 << 20;

  // With strict = true the parameters must satisfy:
  //   0 < epsilon < 1 < q < p, m even,
  //   1 - 1/q <= 1/q - 1/(p+epsilon),
  //   1 - 1/p >= (2-delta)(1/q - 1/(p+epsilon)),
  //   m^(1/q-1/(p+epsilon)) > 2 + 2^(1/p) m^(1/q-1/p).
  void validate() const;
};

/// max{ |sum_{i<=m} a_i|, (sum_{i<=m}|a_i|^p)^(1/p), (sum_{i>m}|a_i|^q)^(1/q) }
class PqBlockSpace : public Space {
 public:
  explicit PqBlockSpace(PqBlockParams params);
  double norm(const SparseVector& x) const override;
  SparseVector norming(const SparseVector& x) const override;
  json to_json() const override;
  const PqBlockParams& params() const { return params_; }

 private:
  PqBlockParams params_;
};

struct Example51Level {
  std::int64_t n_ki = 0;
  std::int64_t n_ki_plus1 = 0;
  std::int64_t m_i = 0;
  IndexSet B_i;
};

struct Example51Params {
  std::int64_t n_k0 = 0;
  std::int64_t n_k0_plus1 = 0;
  std::vector<Example51Level> levels;
  bool relaxed = false;
  int horizon = 1 << 12;

  void validate() const;
};

/// ||x|| = max{ ||x||_inf, max_i w_i sup_{f in F_i} |sum f_j x_j| } with
/// w_i = 1/n_{k_{i-1}+1}^2 and F_i the budgeted zero-sum functional class.
class Example51Space : public Space {
 public:
  explicit Example51Space(Example51Params params);
  double norm(const SparseVector& x) const override;
  SparseVector norming(const SparseVector& x) const override;
  json to_json() const override;
  const Example51Params& params() const { return params_; }
  double weight(int level) const { return weights_[level]; }  // 0-based

  // sup_{f in F_i} |sum_j f_j x_j| for 0-based level index, via LP.
  double f_class_sup(int level, const SparseVector& x) const;
  // Same sup together with an optimal f (needed for norming functionals).
  std::pair<double, SparseVector> f_class_opt(int level, const SparseVector& x) const;

 private:
  Example51Params params_;
  std::vector<double> weights_;
};

struct OikhbergLevel {
  std::int64_t n_lo = 0;  // n_{k_i}
  std::int64_t n_hi = 0;  // n_{k_i+1}
  // derived:
  double c_i = 0.0;
  std::int64_t m_i = 0;
  std::int64_t tilde_m_i = 0;
  std::int64_t beta_i = 0;
};

struct OikhbergParams {
  std::vector<OikhbergLevel> levels;  // only n_lo/n_hi need to be set
  bool relaxed = false;               // lift n_{k_1} > 4
  int horizon = 1 << 20;

  void derive_and_validate();
};

/// max{ ||a||_2, sup_i (c_i/sqrt(m_i)) max_l |sum_{block prefix} (-1)^theta(j) a_j| }
class OikhbergSpace : public Space {
 public:
  explicit OikhbergSpace(OikhbergParams params);
  double norm(const SparseVector& x) const override;
  SparseVector norming(const SparseVector& x) const override;
  json to_json() const override;
  const OikhbergParams& params() const { return params_; }

  // (-1)^theta(j) as +-1 for a global position j inside some block; 0 outside.
  int theta_sign(std::int64_t j) const;

 protected:
  OikhbergParams params_;
};

/// 1-unconditional variant: the prefix max is replaced by the block l1 sum.
class OikhbergUncondSpace : public Space {
 public:
  explicit OikhbergUncondSpace(OikhbergParams params);
  double norm(const SparseVector& x) const override;
  SparseVector norming(const SparseVector& x) const override;
  json to_json() const override;
  const OikhbergParams& params() const { return params_; }

 private:
  OikhbergParams params_;
};

// (max_{i<=N} ||e_i||, best lower estimate of max_{i<=N} ||e_i*||).
std::pair<double, double> measure_alpha(const Space& space, int N);

// {"space": "...", "params": {...}}
SpacePtr space_from_json(const json& j);

}  // namespace greedylab
