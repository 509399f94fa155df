#include "greedylab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "greedylab/simplex.hpp"

namespace greedylab {

namespace {

constexpr double kBranchTol = 1e-9;

int sgn(double v) { return v >= 0.0 ? 1 : -1; }

double parse_p(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("p must be a number or \"inf\"");
  }
  return j.get<double>();
}

}  // namespace

// ---------------------------------------------------------------- LpSpace

LpSpace::LpSpace(double p, int horizon) : p_(p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp requires p >= 1");
  name_ = "lp";
  horizon_ = horizon;
  schauder_ = 1.0;
}

double LpSpace::norm(const SparseVector& x) const {
  if (std::isinf(p_)) return x.linf_norm();
  if (p_ == 1.0) return x.l1_norm();
  if (p_ == 2.0) return x.l2_norm();
  double s = 0.0;
  for (const auto& [i, c] : x.entries()) s += std::pow(std::abs(c), p_);
  return std::pow(s, 1.0 / p_);
}

SparseVector LpSpace::norming(const SparseVector& x) const {
  if (x.is_zero()) throw std::invalid_argument("norming functional of zero vector");
  SparseVector f;
  if (std::isinf(p_)) {
    double m = x.linf_norm();
    for (const auto& [i, c] : x.entries())
      if (std::abs(c) == m) {
        f.set(i, sgn(c));
        return f;
      }
  }
  if (p_ == 1.0) {
    for (const auto& [i, c] : x.entries()) f.set(i, sgn(c));
    return f;
  }
  double nn = norm(x);
  double scale = std::pow(nn, p_ - 1.0);
  for (const auto& [i, c] : x.entries())
    f.set(i, sgn(c) * std::pow(std::abs(c), p_ - 1.0) / scale);
  return f;
}

json LpSpace::to_json() const {
  json p = std::isinf(p_) ? json("inf") : json(p_);
  return json{{"space", "lp"}, {"params", {{"p", p}, {"horizon", horizon_}}}};
}

// ------------------------------------------------------------ PqBlockSpace

void PqBlockParams::validate() const {
  if (m < 1 || m % 2 != 0) throw std::invalid_argument("pq block length m must be even, positive");
  if (p < 1.0 || q < 1.0) throw std::invalid_argument("pq requires p, q >= 1");
  if (!strict) return;
  if (!(0.0 < epsilon && epsilon < 1.0 && 1.0 < q && q < p))
    throw std::invalid_argument("pq strict mode requires 0 < epsilon < 1 < q < p");
  double gap = 1.0 / q - 1.0 / (p + epsilon);
  if (!(1.0 - 1.0 / q <= gap + 1e-15))
    throw std::invalid_argument("pq parameters violate 1-1/q <= 1/q-1/(p+epsilon)");
  if (!(1.0 - 1.0 / p >= (2.0 - delta) * gap - 1e-15))
    throw std::invalid_argument("pq parameters violate 1-1/p >= (2-delta)(1/q-1/(p+epsilon))");
  double lhs = std::pow(static_cast<double>(m), gap);
  double rhs = 2.0 + std::pow(2.0, 1.0 / p) * std::pow(static_cast<double>(m), 1.0 / q - 1.0 / p);
  if (!(lhs > rhs)) throw std::invalid_argument("pq block length m too small for strict mode");
}

PqBlockSpace::PqBlockSpace(PqBlockParams params) : params_(params) {
  params_.validate();
  name_ = "pq_block";
  horizon_ = params_.horizon;
}

double PqBlockSpace::norm(const SparseVector& x) const {
  double head_sum = 0.0, head_p = 0.0, tail_q = 0.0;
  for (const auto& [i, c] : x.entries()) {
    if (i <= params_.m) {
      head_sum += c;
      head_p += std::pow(std::abs(c), params_.p);
    } else {
      tail_q += std::pow(std::abs(c), params_.q);
    }
  }
  return std::max({std::abs(head_sum), std::pow(head_p, 1.0 / params_.p),
                   std::pow(tail_q, 1.0 / params_.q)});
}

SparseVector PqBlockSpace::norming(const SparseVector& x) const {
  if (x.is_zero()) throw std::invalid_argument("norming functional of zero vector");
  double nn = norm(x);
  double head_sum = 0.0, head_p = 0.0, tail_q = 0.0;
  for (const auto& [i, c] : x.entries()) {
    if (i <= params_.m) {
      head_sum += c;
      head_p += std::pow(std::abs(c), params_.p);
    } else {
      tail_q += std::pow(std::abs(c), params_.q);
    }
  }
  SparseVector f;
  if (std::abs(head_sum) >= nn * (1.0 - kBranchTol)) {
    int s = sgn(head_sum);
    for (int i = 1; i <= params_.m; ++i) f.set(i, s);
    return f;
  }
  double np = std::pow(head_p, 1.0 / params_.p);
  if (np >= nn * (1.0 - kBranchTol)) {
    double scale = std::pow(np, params_.p - 1.0);
    for (const auto& [i, c] : x.entries())
      if (i <= params_.m) f.set(i, sgn(c) * std::pow(std::abs(c), params_.p - 1.0) / scale);
    return f;
  }
  double nq = std::pow(tail_q, 1.0 / params_.q);
  if (nq >= nn * (1.0 - kBranchTol)) {
    double scale = std::pow(nq, params_.q - 1.0);
    for (const auto& [i, c] : x.entries())
      if (i > params_.m) f.set(i, sgn(c) * std::pow(std::abs(c), params_.q - 1.0) / scale);
    return f;
  }
  throw std::logic_error("pq norm: no active branch (oracle inconsistency)");
}

json PqBlockSpace::to_json() const {
  return json{{"space", "pq_block"},
              {"params",
               {{"p", params_.p},
                {"q", params_.q},
                {"epsilon", params_.epsilon},
                {"delta", params_.delta},
                {"m", params_.m},
                {"strict", params_.strict},
                {"horizon", params_.horizon}}}};
}

// --------------------------------------------------------- Example51Space

void Example51Params::validate() const {
  if (levels.empty()) throw std::invalid_argument("example51 needs at least one level");
  if (n_k0 < 1 || n_k0_plus1 <= n_k0)
    throw std::invalid_argument("example51 requires 1 <= n_k0 < n_k0_plus1");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    if (lv.m_i < 1 || lv.n_ki < 1 || lv.n_ki_plus1 <= lv.n_ki)
      throw std::invalid_argument("example51 level parameters malformed");
    if (lv.B_i.empty() || static_cast<std::int64_t>(lv.B_i.size()) != lv.n_ki + lv.m_i)
      throw std::invalid_argument("example51 requires |B_i| = n_ki + m_i");
    if (lv.B_i.min() <= lv.m_i) throw std::invalid_argument("example51 requires m_i < min B_i");
    if (lv.m_i + 2 > lv.n_ki_plus1)
      throw std::invalid_argument("example51 requires m_i + 2 <= n_ki_plus1 (solver exactness)");
    if (i > 0 && !IndexSet::strictly_before(levels[i - 1].B_i, lv.B_i))
      throw std::invalid_argument("example51 requires B_i < B_{i+1}");
  }
  if (relaxed) return;
  if (levels[0].m_i <= 4) throw std::invalid_argument("example51 strict mode requires m_1 > 4");
  std::int64_t prev_plus1 = n_k0_plus1;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    if (lv.m_i * lv.m_i >= lv.n_ki)
      throw std::invalid_argument("example51 strict mode requires m_i^2 < n_ki");
    if (lv.n_ki + 2 * lv.m_i >= lv.n_ki_plus1)
      throw std::invalid_argument("example51 strict mode requires n_ki + 2 m_i < n_ki_plus1");
    if (prev_plus1 * prev_plus1 >= lv.n_ki)
      throw std::invalid_argument("example51 strict mode requires n_{k_{i-1}+1}^2 < n_ki");
    if (i > 0) {
      const auto& pv = levels[i - 1];
      if (pv.m_i * pv.n_ki_plus1 * pv.n_ki_plus1 * pv.n_ki_plus1 >= lv.m_i)
        throw std::invalid_argument("example51 strict mode requires m_i n_{ki+1}^3 < m_{i+1}");
    }
    prev_plus1 = lv.n_ki_plus1;
  }
}

Example51Space::Example51Space(Example51Params params) : params_(std::move(params)) {
  params_.validate();
  name_ = "example51";
  horizon_ = params_.horizon;
  double prev_plus1 = static_cast<double>(params_.n_k0_plus1);
  for (const auto& lv : params_.levels) {
    weights_.push_back(1.0 / (prev_plus1 * prev_plus1));
    prev_plus1 = static_cast<double>(lv.n_ki_plus1);
  }
}

std::pair<double, SparseVector> Example51Space::f_class_opt(int level,
                                                            const SparseVector& x) const {
  const auto& lv = params_.levels[static_cast<std::size_t>(level)];
  if (x.is_zero()) return {0.0, SparseVector()};

  // Only coordinates in supp(x) carry objective weight. Coordinates of
  // B_i \ supp(x) merely absorb the B_i sum t at l1 cost |t|, feasible
  // whenever |t| <= |B_i \ supp(x)|, so they collapse into one signed
  // compensation variable. Split f = u - v with u, v in [0,1] on supp(x)
  // and t = tp - tm; maximize sum x_j (u_j - v_j) under the shared budget.
  const std::vector<int> idx = x.support();
  const std::size_t n = idx.size();
  double free_b = 0.0;  // |B_i \ supp(x)|
  for (int j : lv.B_i.elements())
    if (x.coeff(j) == 0.0) free_b += 1.0;
  const std::size_t tp = 2 * n, tm = 2 * n + 1;
  std::vector<double> c(2 * n + 2, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double xj = x.coeff(idx[j]);
    c[j] = xj;
    c[n + j] = -xj;
  }
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t j = 0; j < 2 * n; ++j) {  // box: u_j <= 1, v_j <= 1
    std::vector<double> row(2 * n + 2, 0.0);
    row[j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  {  // budget: sum (u_j + v_j) + |t| <= m_i
    a.emplace_back(2 * n + 2, 1.0);
    b.push_back(static_cast<double>(lv.m_i));
  }
  {  // compensation capacity: |t| <= |B_i \ supp(x)|
    std::vector<double> row(2 * n + 2, 0.0);
    row[tp] = 1.0;
    row[tm] = 1.0;
    a.push_back(std::move(row));
    b.push_back(free_b);
  }
  {  // sum over B_i inside supp(x) equals t, as two inequalities
    std::vector<double> row(2 * n + 2, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (lv.B_i.contains(idx[j])) {
        row[j] = 1.0;
        row[n + j] = -1.0;
      }
    row[tp] = -1.0;
    row[tm] = 1.0;
    std::vector<double> neg(row);
    for (auto& v : neg) v = -v;
    a.push_back(std::move(row));
    b.push_back(0.0);
    a.push_back(std::move(neg));
    b.push_back(0.0);
  }
  LpResult r = simplex_maximize(c, a, b);
  if (!r.optimal) throw std::runtime_error("f_class_sup: LP unbounded (oracle inconsistency)");
  SparseVector f;
  for (std::size_t j = 0; j < n; ++j) {
    double fj = r.x[j] - r.x[n + j];
    if (std::abs(fj) > 1e-12) f.set(idx[j], fj);
  }
  // realize the compensation on B_i \ supp(x), lowest indices first
  double rem = -(r.x[tp] - r.x[tm]);
  for (int j : lv.B_i.elements()) {
    if (std::abs(rem) <= 1e-12) break;
    if (x.coeff(j) != 0.0) continue;
    double q = std::clamp(rem, -1.0, 1.0);
    f.set(j, q);
    rem -= q;
  }
  return {r.value, f};
}

double Example51Space::f_class_sup(int level, const SparseVector& x) const {
  return f_class_opt(level, x).first;
}

double Example51Space::norm(const SparseVector& x) const {
  double best = x.linf_norm();
  double l1 = x.l1_norm();
  for (std::size_t i = 0; i < params_.levels.size(); ++i) {
    // |sum f_j x_j| <= min(||f||_1 ||x||_inf, ||f||_inf ||x||_1), so the LP
    // cannot beat this cap; skip it when the cap is already dominated
    double cap = weights_[i] *
                 std::min(l1, static_cast<double>(params_.levels[i].m_i) * x.linf_norm());
    if (cap <= best) continue;
    best = std::max(best, weights_[i] * f_class_sup(static_cast<int>(i), x));
  }
  return best;
}

SparseVector Example51Space::norming(const SparseVector& x) const {
  if (x.is_zero()) throw std::invalid_argument("norming functional of zero vector");
  double nn = norm(x);
  double ninf = x.linf_norm();
  if (ninf >= nn * (1.0 - kBranchTol)) {
    for (const auto& [i, c] : x.entries())
      if (std::abs(c) == ninf) {
        SparseVector f;
        f.set(i, sgn(c));
        return f;
      }
  }
  for (std::size_t i = 0; i < params_.levels.size(); ++i) {
    auto [val, f] = f_class_opt(static_cast<int>(i), x);
    if (weights_[i] * val >= nn * (1.0 - kBranchTol)) {
      if (static_cast<std::int64_t>(f.support_size()) > params_.levels[i].n_ki_plus1)
        throw std::logic_error("f_class_sup returned an over-wide functional");
      return f * weights_[i];
    }
  }
  throw std::logic_error("example51 norm: no active branch (oracle inconsistency)");
}

json Example51Space::to_json() const {
  json lvls = json::array();
  for (const auto& lv : params_.levels)
    lvls.push_back({{"n_ki", lv.n_ki},
                    {"n_ki_plus1", lv.n_ki_plus1},
                    {"m_i", lv.m_i},
                    {"B_i", lv.B_i.to_json()}});
  return json{{"space", "example51"},
              {"params",
               {{"n_k0", params_.n_k0},
                {"n_k0_plus1", params_.n_k0_plus1},
                {"levels", lvls},
                {"relaxed", params_.relaxed},
                {"horizon", params_.horizon}}}};
}

// ---------------------------------------------------------- OikhbergSpace

void OikhbergParams::derive_and_validate() {
  if (levels.empty()) throw std::invalid_argument("oikhberg needs at least one level");
  std::int64_t tilde = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    auto& lv = levels[i];
    if (lv.n_lo < 1 || lv.n_hi <= lv.n_lo)
      throw std::invalid_argument("oikhberg level requires 1 <= n_lo < n_hi");
    if (i > 0) {
      // strict ratio growth, compared exactly
      __int128 lhs = static_cast<__int128>(lv.n_hi) * levels[i - 1].n_lo;
      __int128 rhs = static_cast<__int128>(levels[i - 1].n_hi) * lv.n_lo;
      if (lhs <= rhs)
        throw std::invalid_argument("oikhberg requires strictly increasing ratios n_hi/n_lo");
    }
    lv.c_i = std::pow(static_cast<double>(lv.n_hi) / static_cast<double>(lv.n_lo), 0.25);
    std::int64_t m = static_cast<std::int64_t>(
        std::floor(std::sqrt(static_cast<double>(lv.n_lo) * static_cast<double>(lv.n_hi))));
    while (m * m > lv.n_lo * lv.n_hi) --m;  // guard the floating floor
    while ((m + 1) * (m + 1) <= lv.n_lo * lv.n_hi) ++m;
    lv.m_i = m;
    lv.beta_i = m / 2;
    lv.tilde_m_i = tilde;
    tilde += m;
    if (lv.m_i < 2) throw std::invalid_argument("oikhberg level too small (m_i < 2)");
  }
  if (!relaxed && levels[0].n_lo <= 4)
    throw std::invalid_argument("oikhberg strict mode requires n_{k_1} > 4");
}

OikhbergSpace::OikhbergSpace(OikhbergParams params) : params_(std::move(params)) {
  params_.derive_and_validate();
  name_ = "oikhberg";
  horizon_ = params_.horizon;
  schauder_ = 1.0;  // monotone basis
  double a1 = 1.0;
  for (const auto& lv : params_.levels)
    a1 = std::max(a1, lv.c_i / std::sqrt(static_cast<double>(lv.m_i)));
  alpha1_ = a1;
}

int OikhbergSpace::theta_sign(std::int64_t j) const {
  for (const auto& lv : params_.levels) {
    if (j <= lv.tilde_m_i) return 0;
    if (j <= lv.tilde_m_i + lv.m_i) {
      if (j <= lv.tilde_m_i + lv.beta_i) return 1;  // theta = 2j, even exponent
      return (j % 2 == 0) ? 1 : -1;                 // theta = j
    }
  }
  return 0;
}

double OikhbergSpace::norm(const SparseVector& x) const {
  double best = x.l2_norm();
  std::int64_t maxidx = x.max_index();
  for (const auto& lv : params_.levels) {
    if (lv.tilde_m_i + 1 > maxidx) break;
    double w = lv.c_i / std::sqrt(static_cast<double>(lv.m_i));
    double run = 0.0, peak = 0.0;
    for (std::int64_t j = lv.tilde_m_i + 1; j <= lv.tilde_m_i + lv.m_i; ++j) {
      run += theta_sign(j) * x.coeff(static_cast<int>(j));
      peak = std::max(peak, std::abs(run));
    }
    best = std::max(best, w * peak);
  }
  return best;
}

SparseVector OikhbergSpace::norming(const SparseVector& x) const {
  if (x.is_zero()) throw std::invalid_argument("norming functional of zero vector");
  double nn = norm(x);
  std::int64_t maxidx = x.max_index();
  // prefix branch first (fixed order), lowest level then shortest prefix
  for (const auto& lv : params_.levels) {
    if (lv.tilde_m_i + 1 > maxidx) break;
    double w = lv.c_i / std::sqrt(static_cast<double>(lv.m_i));
    double run = 0.0;
    for (std::int64_t l = 1; l <= lv.m_i; ++l) {
      std::int64_t j = lv.tilde_m_i + l;
      run += theta_sign(j) * x.coeff(static_cast<int>(j));
      if (w * std::abs(run) >= nn * (1.0 - kBranchTol)) {
        int s = sgn(run);
        SparseVector f;
        for (std::int64_t jj = lv.tilde_m_i + 1; jj <= j; ++jj)
          f.set(static_cast<int>(jj), s * w * theta_sign(jj));
        return f;
      }
    }
  }
  double n2 = x.l2_norm();
  if (n2 >= nn * (1.0 - kBranchTol)) return x * (1.0 / n2);
  throw std::logic_error("oikhberg norm: no active branch (oracle inconsistency)");
}

json OikhbergSpace::to_json() const {
  json lvls = json::array();
  for (const auto& lv : params_.levels)
    lvls.push_back({{"n_lo", lv.n_lo}, {"n_hi", lv.n_hi}});
  return json{{"space", "oikhberg"},
              {"params",
               {{"levels", lvls}, {"relaxed", params_.relaxed}, {"horizon", params_.horizon}}}};
}

// ---------------------------------------------------- OikhbergUncondSpace

OikhbergUncondSpace::OikhbergUncondSpace(OikhbergParams params) : params_(std::move(params)) {
  params_.derive_and_validate();
  name_ = "oikhberg_uncond";
  horizon_ = params_.horizon;
  schauder_ = 1.0;
  double a1 = 1.0;
  for (const auto& lv : params_.levels)
    a1 = std::max(a1, lv.c_i / std::sqrt(static_cast<double>(lv.m_i)));
  alpha1_ = a1;
}

double OikhbergUncondSpace::norm(const SparseVector& x) const {
  double best = x.l2_norm();
  for (const auto& lv : params_.levels) {
    double w = lv.c_i / std::sqrt(static_cast<double>(lv.m_i));
    double sum = 0.0;
    for (const auto& [i, c] : x.entries())
      if (i > lv.tilde_m_i && i <= lv.tilde_m_i + lv.m_i) sum += std::abs(c);
    best = std::max(best, w * sum);
  }
  return best;
}

SparseVector OikhbergUncondSpace::norming(const SparseVector& x) const {
  if (x.is_zero()) throw std::invalid_argument("norming functional of zero vector");
  double nn = norm(x);
  for (const auto& lv : params_.levels) {
    double w = lv.c_i / std::sqrt(static_cast<double>(lv.m_i));
    double sum = 0.0;
    for (const auto& [i, c] : x.entries())
      if (i > lv.tilde_m_i && i <= lv.tilde_m_i + lv.m_i) sum += std::abs(c);
    if (w * sum >= nn * (1.0 - kBranchTol)) {
      SparseVector f;
      for (const auto& [i, c] : x.entries())
        if (i > lv.tilde_m_i && i <= lv.tilde_m_i + lv.m_i) f.set(i, w * sgn(c));
      return f;
    }
  }
  double n2 = x.l2_norm();
  if (n2 >= nn * (1.0 - kBranchTol)) return x * (1.0 / n2);
  throw std::logic_error("oikhberg_uncond norm: no active branch (oracle inconsistency)");
}

json OikhbergUncondSpace::to_json() const {
  json lvls = json::array();
  for (const auto& lv : params_.levels)
    lvls.push_back({{"n_lo", lv.n_lo}, {"n_hi", lv.n_hi}});
  return json{{"space", "oikhberg_uncond"},
              {"params",
               {{"levels", lvls}, {"relaxed", params_.relaxed}, {"horizon", params_.horizon}}}};
}

// ------------------------------------------------------------------ misc

std::pair<double, double> measure_alpha(const Space& space, int N) {
  if (N > space.horizon()) throw std::invalid_argument("measure_alpha beyond horizon");
  double a1 = 0.0, a2 = 0.0;
  SparseVector ei;
  for (int i = 1; i <= N; ++i) {
    ei = SparseVector();
    ei.set(i, 1.0);
    double n = space.norm(ei);
    a1 = std::max(a1, n);
    a2 = std::max(a2, 1.0 / n);  // |e_i*(e_i / ||e_i||)| = 1/||e_i||
    // small mixed probes can only sharpen the dual lower estimate
    for (int j = 1; j <= std::min(N, 12); ++j) {
      if (j == i) continue;
      for (int s : {1, -1}) {
        SparseVector y = ei;
        y.set(j, s);
        a2 = std::max(a2, 1.0 / space.norm(y));
      }
    }
  }
  return {a1, a2};
}

SpacePtr space_from_json(const json& j) {
  std::string kind = j.at("space").get<std::string>();
  const json params = j.contains("params") ? j["params"] : json::object();
  auto get_int = [&params](const char* key, int dflt) {
    return params.contains(key) ? params[key].get<int>() : dflt;
  };
  if (kind == "lp") {
    double p = params.contains("p") ? parse_p(params["p"]) : 2.0;
    return std::make_shared<LpSpace>(p, get_int("horizon", 1 << 20));
  }
  if (kind == "pq_block") {
    PqBlockParams pp;
    pp.p = params.value("p", 2.0);
    pp.q = params.value("q", 2.0);
    pp.epsilon = params.value("epsilon", 0.5);
    pp.delta = params.value("delta", 0.25);
    pp.m = params.at("m").get<int>();
    pp.strict = params.value("strict", false);
    pp.horizon = get_int("horizon", 1 << 20);
    return std::make_shared<PqBlockSpace>(pp);
  }
  if (kind == "example51") {
    Example51Params ep;
    ep.n_k0 = params.at("n_k0").get<std::int64_t>();
    ep.n_k0_plus1 = params.at("n_k0_plus1").get<std::int64_t>();
    for (const auto& lj : params.at("levels")) {
      Example51Level lv;
      lv.n_ki = lj.at("n_ki").get<std::int64_t>();
      lv.n_ki_plus1 = lj.at("n_ki_plus1").get<std::int64_t>();
      lv.m_i = lj.at("m_i").get<std::int64_t>();
      lv.B_i = IndexSet::from_json(lj.at("B_i"));
      ep.levels.push_back(std::move(lv));
    }
    ep.relaxed = params.value("relaxed", false);
    ep.horizon = get_int("horizon", 1 << 12);
    return std::make_shared<Example51Space>(std::move(ep));
  }
  if (kind == "oikhberg" || kind == "oikhberg_uncond") {
    OikhbergParams op;
    for (const auto& lj : params.at("levels")) {
      OikhbergLevel lv;
      lv.n_lo = lj.at("n_lo").get<std::int64_t>();
      lv.n_hi = lj.at("n_hi").get<std::int64_t>();
      op.levels.push_back(lv);
    }
    op.relaxed = params.value("relaxed", false);
    op.horizon = get_int("horizon", 1 << 20);
    if (kind == "oikhberg") return std::make_shared<OikhbergSpace>(std::move(op));
    return std::make_shared<OikhbergUncondSpace>(std::move(op));
  }
  throw std::invalid_argument("unknown space kind: " + kind);
}

}  // namespace greedylab
