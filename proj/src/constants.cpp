#include "greedylab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "greedylab/greedy.hpp"

namespace greedylab {
namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 seeded(const SearchBudget& b, const std::string& tag) {
  return std::mt19937_64(b.seed ^ fnv1a(tag));
}

std::uint64_t mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap;
  return a * b;
}

std::uint64_t choose_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact at every step
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > cap / num) return cap;
    r = r * num / static_cast<std::uint64_t>(i);
    if (r >= cap) return cap;
  }
  return r;
}

std::uint64_t pow_capped(std::uint64_t base, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = mul_capped(r, base, cap);
  return r;
}

std::vector<int> full_pool(int N) {
  std::vector<int> p(N);
  for (int i = 0; i < N; ++i) p[i] = i + 1;
  return p;
}

std::vector<int> card_list(const GapSequence& n, const SearchBudget& b) {
  std::int64_t hi = std::min<std::int64_t>(b.cardinality_cap, b.dimension);
  std::vector<int> out;
  for (std::int64_t v : n.values_up_to(hi))
    if (v >= 1) out.push_back(static_cast<int>(v));
  return out;
}

template <class F>
void each_combination(const std::vector<int>& pool, int card, F&& fn) {
  const int n = static_cast<int>(pool.size());
  if (card < 0 || card > n) return;
  if (card == 0) {
    fn(IndexSet());
    return;
  }
  std::vector<int> comb(card);
  for (int i = 0; i < card; ++i) comb[i] = i;
  for (;;) {
    std::vector<int> elems(card);
    for (int i = 0; i < card; ++i) elems[i] = pool[comb[i]];
    fn(IndexSet(std::move(elems)));
    int i = card - 1;
    while (i >= 0 && comb[i] == n - card + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
  }
}

bool sets_exhaustive(int pool_size, int card, std::uint64_t per_item, const SearchBudget& b) {
  std::uint64_t cap = b.enumeration_limit + 1;
  std::uint64_t c = choose_capped(pool_size, card, cap);
  return mul_capped(c, std::max<std::uint64_t>(per_item, 1), cap) <= b.enumeration_limit;
}

void need_structured(const SearchBudget& b) {
  if (!b.allow_structured)
    throw std::runtime_error("enumeration exceeds the configured limit and structured fallback is disabled");
}

// Sets of the given cardinality drawn from `pool`. Exhaustive, or the
// structured family: contiguous windows of the pool plus seeded random draws.
template <class F>
void visit_sets(const std::vector<int>& pool, int card, bool exhaustive, const SearchBudget& b,
                std::mt19937_64& rng, F&& fn) {
  if (card > static_cast<int>(pool.size())) return;
  if (exhaustive) {
    each_combination(pool, card, fn);
    return;
  }
  need_structured(b);
  for (std::size_t a = 0; a + card <= pool.size(); ++a) {
    std::vector<int> elems(pool.begin() + a, pool.begin() + a + card);
    fn(IndexSet(std::move(elems)));
  }
  for (int r = 0; r < b.random_samples; ++r) {
    std::vector<int> elems;
    std::sample(pool.begin(), pool.end(), std::back_inserter(elems), card, rng);
    fn(IndexSet(std::move(elems)));
  }
}

// Sign patterns on A. Structured family: constant, alternating, random masks.
template <class F>
void visit_signs(const IndexSet& a, bool exhaustive, const SearchBudget& b, std::mt19937_64& rng,
                 F&& fn) {
  const int k = static_cast<int>(a.size());
  if (k == 0) {
    fn(SignPattern::all_plus(a));
    return;
  }
  if (exhaustive && k < 62) {
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) fn(SignPattern::from_mask(a, mask));
    return;
  }
  need_structured(b);
  fn(SignPattern::all_plus(a));
  if (k < 62)
    fn(SignPattern::from_mask(a, (1ull << k) - 1));
  else {
    std::vector<int> s(k, -1);
    fn(SignPattern(a, std::move(s)));
  }
  fn(SignPattern::alternating(a, 1));
  fn(SignPattern::alternating(a, -1));
  int extra = std::min(b.random_samples, 32);
  for (int r = 0; r < extra; ++r) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = (rng() & 1u) ? -1 : 1;
    fn(SignPattern(a, std::move(s)));
  }
}

constexpr std::uint64_t kCanonicalSigns = 4 + 32;

// Tracks an extremal norm value together with its vector; ties resolve to the
// lexicographically least serialized vector so results are order-independent.
struct Extreme {
  bool found = false;
  double value = 0.0;
  SparseVector vec;
  std::string key;

  void offer_max(double v, const SparseVector& w) {
    if (!found || v > value) {
      found = true;
      value = v;
      vec = w;
      key = w.to_json().dump();
    } else if (v == value) {
      std::string k = w.to_json().dump();
      if (k < key) {
        vec = w;
        key = std::move(k);
      }
    }
  }

  void offer_min(double v, const SparseVector& w) {
    if (!found || v < value) {
      found = true;
      value = v;
      vec = w;
      key = w.to_json().dump();
    } else if (v == value) {
      std::string k = w.to_json().dump();
      if (k < key) {
        vec = w;
        key = std::move(k);
      }
    }
  }
};

struct BestRatio {
  bool found = false;
  double value = 0.0;
  json witness;
  std::string key;

  void offer(double v, const std::function<json()>& mk) {
    if (!std::isfinite(v)) return;
    if (!found || v > value) {
      found = true;
      value = v;
      witness = mk();
      key = witness.dump();
    } else if (v == value) {
      json w = mk();
      std::string k = w.dump();
      if (k < key) {
        witness = std::move(w);
        key = std::move(k);
      }
    }
  }
};

json make_witness(const SparseVector& num, const SparseVector& den, json detail = json::object()) {
  json w;
  w["num"] = num.to_json();
  w["den"] = den.to_json();
  if (!detail.empty()) w["detail"] = std::move(detail);
  return w;
}

ConstantEstimate finish(const std::string& name, const BestRatio& best, bool exhaustive,
                        const std::string& cls) {
  ConstantEstimate e;
  e.name = name;
  if (!best.found) {
    e.value = 0.0;
    e.witness = nullptr;
    e.search_class = "empty";
    e.exact_within_class = true;
    return e;
  }
  e.value = best.value;
  e.witness = best.witness;
  e.search_class = cls;
  e.exact_within_class = exhaustive;
  return e;
}

// Signed indicator family of one cardinality; fn(A, eps, vec, norm).
template <class F>
bool visit_signed_indicators(const Space& sp, int N, int card, const SearchBudget& b,
                             std::mt19937_64& rng, F&& fn) {
  std::uint64_t full_signs = card < 62 ? (1ull << card) : b.enumeration_limit + 1;
  bool both = sets_exhaustive(N, card, full_signs, b);
  bool sets_x = both || sets_exhaustive(N, card, kCanonicalSigns, b);
  auto pool = full_pool(N);
  visit_sets(pool, card, sets_x, b, rng, [&](const IndexSet& a) {
    visit_signs(a, both, b, rng, [&](const SignPattern& eps) {
      SparseVector v = indicator(a, eps);
      fn(a, eps, v, sp.norm(v));
    });
  });
  return both && sets_x;
}

std::vector<double> nonzero_grid(const SearchBudget& b) {
  std::vector<double> g;
  for (double v : b.grid)
    if (v != 0.0) g.push_back(v);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

std::vector<double> positive_grid(const SearchBudget& b) {
  std::vector<double> g;
  for (double v : b.grid)
    if (v > 0.0) g.push_back(v);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

SparseVector on_support(const std::vector<int>& supp, const std::vector<double>& coeffs) {
  SparseVector v;
  for (std::size_t i = 0; i < supp.size(); ++i) v.set(supp[i], coeffs[i]);
  return v;
}

// Auxiliary coefficient vectors with entries in the grid, |coeff| <= 1,
// support inside `free`, support size 1..cap. The zero vector is not emitted.
template <class F>
void visit_x(const std::vector<int>& free, int cap, bool exhaustive, const SearchBudget& b,
             std::mt19937_64& rng, F&& fn) {
  cap = std::min<int>(cap, static_cast<int>(free.size()));
  if (cap <= 0) return;
  const std::vector<double> g = nonzero_grid(b);
  if (exhaustive) {
    for (int k = 1; k <= cap; ++k) {
      each_combination(free, k, [&](const IndexSet& t) {
        std::vector<double> coeffs(k, g[0]);
        std::vector<int> odo(k, 0);
        for (;;) {
          fn(on_support(t.elements(), coeffs));
          int i = k - 1;
          while (i >= 0 && odo[i] == static_cast<int>(g.size()) - 1) --i;
          if (i < 0) break;
          ++odo[i];
          coeffs[i] = g[odo[i]];
          for (int j = i + 1; j < k; ++j) {
            odo[j] = 0;
            coeffs[j] = g[0];
          }
        }
      });
    }
    return;
  }
  need_structured(b);
  const std::vector<double> pos = positive_grid(b);
  const std::size_t stride = std::max<std::size_t>(1, free.size() / 16);
  for (int k = 1; k <= cap; ++k) {
    std::vector<std::size_t> starts;
    for (std::size_t a = 0; a + k <= free.size(); a += stride) starts.push_back(a);
    if (free.size() >= static_cast<std::size_t>(k) &&
        (starts.empty() || starts.back() != free.size() - k))
      starts.push_back(free.size() - k);
    for (std::size_t a : starts) {
      std::vector<int> supp(free.begin() + a, free.begin() + a + k);
      for (double v : pos) {
        fn(on_support(supp, std::vector<double>(k, v)));
        fn(on_support(supp, std::vector<double>(k, -v)));
        std::vector<double> alt(k), alt2(k);
        for (int i = 0; i < k; ++i) {
          alt[i] = (i % 2 == 0) ? v : -v;
          alt2[i] = (i % 2 == 0) ? -v : v;
        }
        fn(on_support(supp, alt));
        fn(on_support(supp, alt2));
      }
    }
  }
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, cap);
  for (int r = 0; r < b.random_samples; ++r) {
    int k = len(rng);
    std::vector<int> supp;
    std::sample(free.begin(), free.end(), std::back_inserter(supp), k, rng);
    std::vector<double> coeffs(k);
    for (int i = 0; i < k; ++i) coeffs[i] = unif(rng);
    fn(on_support(supp, coeffs));
  }
}

std::vector<int> complement_of(int N, const IndexSet& a) {
  std::vector<int> free;
  for (int i = 1; i <= N; ++i)
    if (!a.contains(i)) free.push_back(i);
  return free;
}

// The class behind the quasi-greedy-for-largest-coefficients constant and the
// fresh-block companions of the symmetry constant; both estimators must walk
// exactly the same configurations, so the iteration lives here.
template <class F>
bool visit_qglc_class(const Space& sp, const std::vector<int>& cards, const SearchBudget& b,
                      F&& fn) {
  auto rng = seeded(b, "qglc-class");
  const int N = b.dimension;
  const std::uint64_t g = nonzero_grid(b).size();
  bool exh = true;
  std::uint64_t cfg = 0;
  for (int c : cards) {
    std::uint64_t xcount = 1;
    for (int k = 1; k <= b.x_support_cap; ++k)
      xcount += mul_capped(choose_capped(N - c, k, b.enumeration_limit + 1),
                           pow_capped(g, k, b.enumeration_limit + 1), b.enumeration_limit + 1);
    std::uint64_t signs = c < 62 ? (1ull << c) : b.enumeration_limit + 1;
    bool full = sets_exhaustive(N, c, mul_capped(signs, xcount, b.enumeration_limit + 1), b);
    bool sets_x = full || sets_exhaustive(N, c, kCanonicalSigns, b);
    exh = exh && full;
    auto pool = full_pool(N);
    visit_sets(pool, c, sets_x, b, rng, [&](const IndexSet& a) {
      std::vector<int> free = complement_of(N, a);
      visit_signs(a, full, b, rng, [&](const SignPattern& eps) {
        // the signed indicator is shared across every auxiliary x
        SparseVector base = indicator(a, eps);
        ++cfg;
        fn(a, eps, SparseVector(), base, cfg);
        visit_x(free, b.x_support_cap, full, b, rng,
                [&](const SparseVector& x) { fn(a, eps, x, base, cfg); });
      });
    });
  }
  return exh;
}

}  // namespace

void SearchBudget::validate() const {
  if (dimension < 1) throw std::invalid_argument("budget dimension must be positive");
  if (cardinality_cap < 1 || cardinality_cap > dimension)
    throw std::invalid_argument("cardinality cap must lie in [1, dimension]");
  if (x_support_cap < 0) throw std::invalid_argument("x support cap must be nonnegative");
  if (random_samples < 0) throw std::invalid_argument("random sample count must be nonnegative");
  if (enumeration_limit < 1) throw std::invalid_argument("enumeration limit must be positive");
  bool has_one = false, has_minus_one = false;
  for (double v : grid) {
    if (std::abs(v) > 1.0) throw std::invalid_argument("grid values must lie in [-1, 1]");
    if (v == 1.0) has_one = true;
    if (v == -1.0) has_minus_one = true;
  }
  if (!has_one || !has_minus_one) throw std::invalid_argument("grid must contain +1 and -1");
}

json SearchBudget::to_json() const {
  return json{{"dimension", dimension},
              {"cardinality_cap", cardinality_cap},
              {"grid", grid},
              {"random_samples", random_samples},
              {"seed", seed},
              {"enumeration_limit", enumeration_limit},
              {"x_support_cap", x_support_cap},
              {"allow_structured", allow_structured}};
}

SearchBudget SearchBudget::from_json(const json& j) {
  SearchBudget b;
  if (j.contains("dimension")) b.dimension = j.at("dimension").get<int>();
  if (j.contains("cardinality_cap")) b.cardinality_cap = j.at("cardinality_cap").get<int>();
  if (j.contains("grid")) b.grid = j.at("grid").get<std::vector<double>>();
  if (j.contains("random_samples")) b.random_samples = j.at("random_samples").get<int>();
  if (j.contains("seed")) b.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("enumeration_limit"))
    b.enumeration_limit = j.at("enumeration_limit").get<std::uint64_t>();
  if (j.contains("x_support_cap")) b.x_support_cap = j.at("x_support_cap").get<int>();
  if (j.contains("allow_structured")) b.allow_structured = j.at("allow_structured").get<bool>();
  b.validate();
  return b;
}

json ConstantEstimate::to_json() const {
  return json{{"name", name},
              {"value", value},
              {"witness", witness},
              {"search_class", search_class},
              {"exact_within_class", exact_within_class}};
}

double reevaluate(const Space& space, const ConstantEstimate& est) {
  if (est.witness.is_null() || !est.witness.contains("num") || !est.witness.contains("den"))
    return 0.0;
  SparseVector num = SparseVector::from_json(est.witness.at("num"));
  SparseVector den = SparseVector::from_json(est.witness.at("den"));
  double d = space.norm(den);
  if (d <= 0.0) return 0.0;
  return space.norm(num) / d;
}

ConstantEstimate democracy_constant(const Space& space, const GapSequence& n,
                                    const SearchBudget& budget) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, "democracy");
  auto pool = full_pool(budget.dimension);
  std::vector<Extreme> mx(cards.size()), mn(cards.size());
  bool exh = true;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    bool e = sets_exhaustive(budget.dimension, cards[i], 1, budget);
    exh = exh && e;
    visit_sets(pool, cards[i], e, budget, rng, [&](const IndexSet& a) {
      SparseVector v = indicator(a);
      double t = space.norm(v);
      mx[i].offer_max(t, v);
      mn[i].offer_min(t, v);
    });
  }
  BestRatio best;
  for (std::size_t i = 0; i < cards.size(); ++i)
    for (std::size_t j = i; j < cards.size(); ++j) {
      if (!mx[i].found || !mn[j].found || mn[j].value <= 0.0) continue;
      best.offer(mx[i].value / mn[j].value, [&] {
        return make_witness(mx[i].vec, mn[j].vec,
                            json{{"card_num", cards[i]}, {"card_den", cards[j]}});
      });
    }
  return finish("democracy", best, exh, exh ? "exhaustive" : "structured");
}

ConstantEstimate superdemocracy_constant(const Space& space, const GapSequence& n,
                                         const SearchBudget& budget) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, "superdemocracy");
  std::vector<Extreme> mx(cards.size()), mn(cards.size());
  bool exh = true;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    bool e = visit_signed_indicators(space, budget.dimension, cards[i], budget, rng,
                                     [&](const IndexSet&, const SignPattern&,
                                         const SparseVector& v, double t) {
                                       mx[i].offer_max(t, v);
                                       mn[i].offer_min(t, v);
                                     });
    exh = exh && e;
  }
  BestRatio best;
  for (std::size_t i = 0; i < cards.size(); ++i)
    for (std::size_t j = i; j < cards.size(); ++j) {
      if (!mx[i].found || !mn[j].found || mn[j].value <= 0.0) continue;
      best.offer(mx[i].value / mn[j].value, [&] {
        return make_witness(mx[i].vec, mn[j].vec,
                            json{{"card_num", cards[i]}, {"card_den", cards[j]}});
      });
    }
  return finish("superdemocracy", best, exh, exh ? "exhaustive" : "structured");
}

namespace {

// Shared machinery for the two "A before B" constants: bucket extremes by
// max(A) / min(B), fold, and take the best split point per cardinality pair.
ConstantEstimate before_constant(const Space& space, const GapSequence& n,
                                 const SearchBudget& budget, bool signed_version,
                                 const std::string& name) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, name);
  const int N = budget.dimension;
  std::vector<std::vector<Extreme>> num_by_max(cards.size()), den_by_min(cards.size());
  bool exh = true;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    num_by_max[i].assign(N + 2, Extreme());
    den_by_min[i].assign(N + 2, Extreme());
    auto feed = [&](const IndexSet& a, const SparseVector& v, double t) {
      num_by_max[i][a.max()].offer_max(t, v);
      den_by_min[i][a.min()].offer_min(t, v);
    };
    if (signed_version) {
      bool e = visit_signed_indicators(space, N, cards[i], budget, rng,
                                       [&](const IndexSet& a, const SignPattern&,
                                           const SparseVector& v, double t) { feed(a, v, t); });
      exh = exh && e;
    } else {
      bool e = sets_exhaustive(N, cards[i], 1, budget);
      exh = exh && e;
      visit_sets(full_pool(N), cards[i], e, budget, rng, [&](const IndexSet& a) {
        SparseVector v = indicator(a);
        feed(a, v, space.norm(v));
      });
    }
    // fold: prefix max over max(A) <= t, suffix min over min(B) >= t
    for (int t = 1; t <= N; ++t)
      if (num_by_max[i][t - 1].found)
        num_by_max[i][t].offer_max(num_by_max[i][t - 1].value, num_by_max[i][t - 1].vec);
    for (int t = N; t >= 1; --t)
      if (den_by_min[i][t + 1].found)
        den_by_min[i][t].offer_min(den_by_min[i][t + 1].value, den_by_min[i][t + 1].vec);
  }
  BestRatio best;
  for (std::size_t i = 0; i < cards.size(); ++i)
    for (std::size_t j = i; j < cards.size(); ++j)
      for (int t = 1; t < N; ++t) {
        const Extreme& nu = num_by_max[i][t];
        const Extreme& de = den_by_min[j][t + 1];
        if (!nu.found || !de.found || de.value <= 0.0) continue;
        best.offer(nu.value / de.value, [&] {
          return make_witness(nu.vec, de.vec,
                              json{{"card_num", cards[i]}, {"card_den", cards[j]}});
        });
      }
  return finish(name, best, exh, exh ? "exhaustive" : "structured");
}

}  // namespace

ConstantEstimate conservative_constant(const Space& space, const GapSequence& n,
                                       const SearchBudget& budget) {
  return before_constant(space, n, budget, false, "conservative");
}

ConstantEstimate superconservative_constant(const Space& space, const GapSequence& n,
                                            const SearchBudget& budget) {
  return before_constant(space, n, budget, true, "superconservative");
}

ConstantEstimate ucc_constant(const Space& space, const GapSequence& n,
                              const SearchBudget& budget) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, "ucc");
  const int N = budget.dimension;
  BestRatio best;
  bool exh = true;
  for (int c : cards) {
    std::uint64_t full_signs = c < 62 ? (1ull << c) : budget.enumeration_limit + 1;
    bool both = sets_exhaustive(N, c, full_signs, budget);
    bool sets_x = both || sets_exhaustive(N, c, kCanonicalSigns, budget);
    exh = exh && both && sets_x;
    visit_sets(full_pool(N), c, sets_x, budget, rng, [&](const IndexSet& a) {
      Extreme lo, hi;
      visit_signs(a, both, budget, rng, [&](const SignPattern& eps) {
        SparseVector v = indicator(a, eps);
        double t = space.norm(v);
        hi.offer_max(t, v);
        lo.offer_min(t, v);
      });
      if (hi.found && lo.found && lo.value > 0.0)
        best.offer(hi.value / lo.value,
                   [&] { return make_witness(hi.vec, lo.vec, json{{"card", c}}); });
    });
  }
  return finish("ucc", best, exh, exh ? "exhaustive" : "structured");
}

namespace {

// Extensions E of A: subsets of the complement with 0 <= |E| <= cap.
// Structured: empty, runs just after max(A) and just before min(A), random.
template <class F>
void visit_exts(int N, const IndexSet& a, int cap, bool exhaustive, const SearchBudget& b,
                std::mt19937_64& rng, F&& fn) {
  std::vector<int> free = complement_of(N, a);
  cap = std::min<int>(cap, static_cast<int>(free.size()));
  fn(IndexSet());
  if (cap <= 0) return;
  if (exhaustive) {
    for (int k = 1; k <= cap; ++k) each_combination(free, k, fn);
    return;
  }
  need_structured(b);
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> after, before;
    for (int i : free) {
      if (!a.empty() && i > a.max() && static_cast<int>(after.size()) < k) after.push_back(i);
      if (!a.empty() && i < a.min()) before.push_back(i);
    }
    if (static_cast<int>(after.size()) == k) fn(IndexSet(after));
    if (static_cast<int>(before.size()) >= k)
      fn(IndexSet(std::vector<int>(before.end() - k, before.end())));
  }
  std::uniform_int_distribution<int> len(1, cap);
  for (int r = 0; r < b.random_samples; ++r) {
    int k = len(rng);
    std::vector<int> e;
    std::sample(free.begin(), free.end(), std::back_inserter(e), k, rng);
    fn(IndexSet(std::move(e)));
  }
}

}  // namespace

ConstantEstimate succ_constant(const Space& space, const GapSequence& n,
                               const SearchBudget& budget, bool free_numerator_signs) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, "succ");
  const int N = budget.dimension;
  BestRatio best;
  bool exh = true;
  for (int c : cards) {
    std::uint64_t extc = 1;
    for (int k = 1; k <= budget.x_support_cap; ++k)
      extc += choose_capped(N - c, k, budget.enumeration_limit + 1);
    int bc = c + budget.x_support_cap;
    std::uint64_t signs = bc < 62 ? (1ull << bc) : budget.enumeration_limit + 1;
    bool full = sets_exhaustive(N, c, mul_capped(extc, signs, budget.enumeration_limit + 1),
                                budget);
    bool sets_x = full || sets_exhaustive(N, c, kCanonicalSigns, budget);
    exh = exh && full;
    visit_sets(full_pool(N), c, sets_x, budget, rng, [&](const IndexSet& a) {
      Extreme num_free;
      if (free_numerator_signs)
        visit_signs(a, full, budget, rng, [&](const SignPattern& eps) {
          SparseVector v = indicator(a, eps);
          num_free.offer_max(space.norm(v), v);
        });
      visit_exts(N, a, budget.x_support_cap, full, budget, rng, [&](const IndexSet& e) {
        IndexSet bset = IndexSet::disjoint_union(a, e);
        visit_signs(bset, full, budget, rng, [&](const SignPattern& epsp) {
          SparseVector den = indicator(bset, epsp);
          double dn = space.norm(den);
          if (dn <= 0.0) return;
          if (free_numerator_signs) {
            if (!num_free.found) return;
            best.offer(num_free.value / dn, [&] {
              return make_witness(num_free.vec, den, json{{"card", c}, {"B", bset.to_json()}});
            });
          } else {
            SparseVector num = indicator(a, epsp.restrict_to(a));
            best.offer(space.norm(num) / dn, [&] {
              return make_witness(num, den, json{{"card", c}, {"B", bset.to_json()}});
            });
          }
        });
      });
    });
  }
  return finish(free_numerator_signs ? "succ_free" : "succ", best, exh,
                exh ? "exhaustive" : "structured");
}

namespace {

// Coefficient tuples on A with moduli in (0, 1]. Structured: grid patterns
// (constant, sign-alternating, modulus-alternating) plus random draws with
// moduli in [g_min, 1].
template <class F>
void visit_coeffs(int card, bool exhaustive, const SearchBudget& b, std::mt19937_64& rng,
                  F&& fn) {
  const std::vector<double> g = nonzero_grid(b);
  if (exhaustive) {
    std::vector<double> coeffs(card, g[0]);
    std::vector<int> odo(card, 0);
    for (;;) {
      fn(coeffs);
      int i = card - 1;
      while (i >= 0 && odo[i] == static_cast<int>(g.size()) - 1) --i;
      if (i < 0) break;
      ++odo[i];
      coeffs[i] = g[odo[i]];
      for (int j = i + 1; j < card; ++j) {
        odo[j] = 0;
        coeffs[j] = g[0];
      }
    }
    return;
  }
  need_structured(b);
  const std::vector<double> pos = positive_grid(b);
  double h = pos.front();
  fn(std::vector<double>(card, 1.0));
  std::vector<double> alt(card), modalt(card), modalt2(card), both(card);
  for (int i = 0; i < card; ++i) {
    alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
    modalt[i] = (i % 2 == 0) ? 1.0 : h;
    modalt2[i] = (i % 2 == 0) ? h : 1.0;
    both[i] = (i % 2 == 0) ? 1.0 : -h;
  }
  fn(alt);
  if (h < 1.0) {
    fn(modalt);
    fn(modalt2);
    fn(both);
  }
  std::uniform_real_distribution<double> mod(h, 1.0);
  for (int r = 0; r < b.random_samples; ++r) {
    std::vector<double> coeffs(card);
    for (int i = 0; i < card; ++i) {
      double m = mod(rng);
      coeffs[i] = (rng() & 1u) ? -m : m;
    }
    fn(coeffs);
  }
}

}  // namespace

std::pair<ConstantEstimate, ConstantEstimate> ul_constants(const Space& space,
                                                           const GapSequence& n,
                                                           const SearchBudget& budget) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, "ul");
  const int N = budget.dimension;
  const std::uint64_t g = nonzero_grid(budget).size();
  BestRatio best1, best2;
  bool exh1 = true, exh2 = true;
  for (int c : cards) {
    std::uint64_t tuples = pow_capped(g, c, budget.enumeration_limit + 1);
    bool full = sets_exhaustive(N, c, tuples, budget);
    bool sets_x = full || sets_exhaustive(N, c, kCanonicalSigns, budget);
    std::uint64_t signs = c < 62 ? (1ull << c) : budget.enumeration_limit + 1;
    bool full_signs = sets_exhaustive(N, c, signs, budget);
    bool sets_x2 = full_signs || sets_exhaustive(N, c, kCanonicalSigns, budget);
    exh1 = exh1 && full;
    exh2 = exh2 && full_signs;
    visit_sets(full_pool(N), c, sets_x && sets_x2, budget, rng, [&](const IndexSet& a) {
      SparseVector ind = indicator(a);
      double base = space.norm(ind);
      if (base <= 0.0) return;
      // C_2: max coefficients are +-1, so extreme points are signed indicators
      visit_signs(a, full_signs, budget, rng, [&](const SignPattern& eps) {
        SparseVector v = indicator(a, eps);
        best2.offer(space.norm(v) / base,
                    [&] { return make_witness(v, ind, json{{"card", c}}); });
      });
      // C_1: min |a_i| ||1_A|| <= C_1 ||sum a_i e_i||
      visit_coeffs(c, full, budget, rng, [&](const std::vector<double>& coeffs) {
        SparseVector v = on_support(a.elements(), coeffs);
        double nv = space.norm(v);
        if (nv <= 0.0) return;
        double mn = 1.0;
        for (double t : coeffs) mn = std::min(mn, std::abs(t));
        best1.offer(mn * base / nv,
                    [&] { return make_witness(ind * mn, v, json{{"card", c}}); });
      });
    });
  }
  ConstantEstimate c1 = finish("ul_lower", best1, exh1, exh1 ? "exhaustive" : "structured");
  ConstantEstimate c2 = finish("ul_upper", best2, exh2, exh2 ? "exhaustive" : "structured");
  return {c1, c2};
}

ConstantEstimate qglc_constant(const Space& space, const GapSequence& n,
                               const SearchBudget& budget) {
  budget.validate();
  auto cards = card_list(n, budget);
  BestRatio best;
  std::uint64_t cached = 0;
  double cached_norm = 0.0;
  bool exh = visit_qglc_class(space, cards, budget,
                              [&](const IndexSet& a, const SignPattern& eps,
                                  const SparseVector& x, const SparseVector& num,
                                  std::uint64_t cfg) {
                                if (cfg != cached) {
                                  cached = cfg;
                                  cached_norm = space.norm(num);
                                }
                                SparseVector den = num + x;
                                double dn = space.norm(den);
                                if (dn <= 0.0) return;
                                best.offer(cached_norm / dn, [&] {
                                  return make_witness(num, den,
                                                      json{{"card", static_cast<int>(a.size())}});
                                });
                              });
  return finish("qglc", best, exh, exh ? "exhaustive" : "structured");
}

ConstantEstimate slc_constant(const Space& space, const GapSequence& n,
                              const SearchBudget& budget) {
  budget.validate();
  auto cards = card_list(n, budget);
  auto rng = seeded(budget, "slc");
  const int N = budget.dimension;
  BestRatio best;
  bool exh = true;

  // (a) x = 0: best disjoint pair of signed indicators, |A| <= |B|.
  // The pair space is the square of the entry count, so the scan works on
  // value groups: the ratio only depends on the two group values, and one
  // bitmask existence check per group pair replaces the per-pair loop.
  const int words = (N + 63) / 64;
  struct Entry {
    double value;
    SparseVector vec;
    std::vector<std::uint64_t> mask;
  };
  auto disjoint = [words](const Entry& a, const Entry& b) {
    for (int w = 0; w < words; ++w)
      if (a.mask[w] & b.mask[w]) return false;
    return true;
  };
  std::vector<std::vector<Entry>> entries(cards.size());
  for (std::size_t i = 0; i < cards.size(); ++i) {
    bool e = visit_signed_indicators(
        space, N, cards[i], budget, rng,
        [&](const IndexSet& a, const SignPattern&, const SparseVector& v, double t) {
          std::vector<std::uint64_t> m(words, 0);
          for (int idx : a.elements()) m[(idx - 1) / 64] |= 1ull << ((idx - 1) % 64);
          entries[i].push_back({t, v, std::move(m)});
        });
    exh = exh && e;
  }
  // group entries of each cardinality by exact norm value
  struct Group {
    double value;
    std::vector<const Entry*> members;
  };
  std::vector<std::vector<Group>> groups(cards.size());  // ascending by value
  for (std::size_t i = 0; i < cards.size(); ++i) {
    std::vector<const Entry*> sorted;
    for (const Entry& e : entries[i]) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const Entry* a, const Entry* b) { return a->value < b->value; });
    for (const Entry* e : sorted) {
      if (groups[i].empty() || groups[i].back().value != e->value)
        groups[i].push_back({e->value, {}});
      groups[i].back().members.push_back(e);
    }
  }
  auto exists_disjoint = [&](const Group& g1, const Group& g2) {
    for (const Entry* a : g1.members)
      for (const Entry* b : g2.members)
        if (disjoint(*a, *b)) return true;
    return false;
  };
  struct PairClass {
    std::size_t i, j;
    const Group* num;
    const Group* den;
  };
  bool have = false;
  double best_r = 0.0;
  std::vector<PairClass> classes;
  for (std::size_t i = 0; i < cards.size(); ++i)
    for (std::size_t j = i; j < cards.size(); ++j) {
      if (groups[i].empty() || groups[j].empty()) continue;
      double minpos = 0.0;
      for (const Group& g : groups[j])
        if (g.value > 0.0) {
          minpos = g.value;
          break;
        }
      if (minpos <= 0.0) continue;
      for (auto g1 = groups[i].rbegin(); g1 != groups[i].rend(); ++g1) {
        if (have && g1->value / minpos < best_r) break;
        for (const Group& g2 : groups[j]) {
          if (g2.value <= 0.0) continue;
          double r = g1->value / g2.value;
          if (have && r < best_r) break;
          if (!exists_disjoint(*g1, g2)) continue;
          if (!have || r > best_r) {
            have = true;
            best_r = r;
            classes.clear();
          }
          if (r == best_r) classes.push_back({i, j, &*g1, &g2});
        }
      }
    }
  // the witness dump starts with the denominator vector, so within a class
  // the least feasible denominator key decides, then its least numerator
  for (const PairClass& pc : classes) {
    auto by_key = [](const std::vector<const Entry*>& in) {
      std::vector<std::pair<std::string, const Entry*>> out;
      for (const Entry* e : in) out.emplace_back(e->vec.to_json().dump(), e);
      std::sort(out.begin(), out.end());
      return out;
    };
    auto dens = by_key(pc.den->members);
    auto nums = by_key(pc.num->members);
    for (const auto& [dk, de] : dens) {
      const Entry* hit = nullptr;
      for (const auto& [nk, nu] : nums)
        if (disjoint(*nu, *de)) {
          hit = nu;
          break;
        }
      if (!hit) continue;
      best.offer(best_r, [&] {
        return make_witness(hit->vec, de->vec,
                            json{{"card_num", cards[pc.i]}, {"card_den", cards[pc.j]}});
      });
      break;
    }
  }

  // (b) fresh tail-block companions: the inner configurations live on
  // [1, N - cap] so the tail block beyond them is always available.
  SearchBudget inner = slc_companion_budget(budget);
  if (inner.dimension >= 1) {
    auto inner_cards = card_list(n, inner);
    // one tail block per cardinality, shared across the class walk
    std::map<int, std::pair<SparseVector, SparseVector>> tails;
    for (int c : inner_cards) {
      std::vector<int> telems(c);
      for (int i = 0; i < c; ++i) telems[i] = N - c + 1 + i;
      IndexSet t(telems);
      tails.emplace(c, std::make_pair(indicator(t), indicator(t) * -1.0));
    }
    bool exh_inner = visit_qglc_class(space, inner_cards, inner,
                     [&](const IndexSet& a, const SignPattern& eps, const SparseVector& x,
                         const SparseVector& base, std::uint64_t) {
                       const int c = static_cast<int>(a.size());
                       const auto& tail = tails.at(c);
                       SparseVector lhs = x + base;
                       double ln = space.norm(lhs);
                       for (int sgn : {1, -1}) {
                         SparseVector rhs = x + (sgn > 0 ? tail.first : tail.second);
                         double rn = space.norm(rhs);
                         if (rn > 0.0 && ln > 0.0) {
                           best.offer(ln / rn, [&] {
                             return make_witness(lhs, rhs, json{{"card_num", c}, {"card_den", c}});
                           });
                           best.offer(rn / ln, [&] {
                             return make_witness(rhs, lhs, json{{"card_num", c}, {"card_den", c}});
                           });
                         }
                       }
                     });
    exh = exh && exh_inner;
  }
  return finish("slc", best, exh, "x0-pairs+tail-companions");
}

SearchBudget slc_companion_budget(const SearchBudget& budget) {
  SearchBudget inner = budget;
  inner.dimension = budget.dimension - budget.cardinality_cap;
  if (inner.dimension >= 1 && inner.cardinality_cap > inner.dimension)
    inner.cardinality_cap = inner.dimension;
  return inner;
}

ConstantEstimate quasi_greedy_constant(const Space& space, const GapSequence& n,
                                       const SearchBudget& budget, double t) {
  budget.validate();
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in (0, 1]");
  auto cards = card_list(n, budget);
  BestRatio best;
  if (cards.empty()) return finish("quasi_greedy", best, true, "empty");
  auto rng = seeded(budget, "quasi");
  const int N = budget.dimension;
  const int maxm = cards.back();

  std::vector<SparseVector> xs;
  std::vector<int> lengths;
  for (int l = 1; l <= std::min(N, budget.x_support_cap); ++l) lengths.push_back(l);
  for (int l = maxm; l <= std::min(N, maxm + 2); ++l) lengths.push_back(l);
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  for (int l : lengths) {
    for (int a = 1; a + l - 1 <= N; ++a) {
      std::vector<int> supp(l);
      for (int i = 0; i < l; ++i) supp[i] = a + i;
      std::vector<double> ones(l, 1.0), alt(l), stair(l), altstair(l), geo(l);
      for (int i = 0; i < l; ++i) {
        alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
        stair[i] = std::ldexp(1.0, -i);
        altstair[i] = alt[i] * stair[i];
        geo[i] = std::pow(0.7, i);
      }
      xs.push_back(on_support(supp, ones));
      xs.push_back(on_support(supp, alt));
      xs.push_back(on_support(supp, stair));
      xs.push_back(on_support(supp, altstair));
      xs.push_back(on_support(supp, geo));
    }
  }
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, std::min(N, maxm + 2));
  auto pool = full_pool(N);
  for (int r = 0; r < budget.random_samples; ++r) {
    int k = len(rng);
    std::vector<int> supp;
    std::sample(pool.begin(), pool.end(), std::back_inserter(supp), k, rng);
    std::vector<double> coeffs(k);
    for (int i = 0; i < k; ++i) coeffs[i] = unif(rng);
    xs.push_back(on_support(supp, coeffs));
  }

  constexpr std::uint64_t kGreedyCap = 20000;
  for (const SparseVector& x : xs) {
    if (x.is_zero()) continue;
    double nx = space.norm(x);
    if (nx <= 0.0) continue;
    const int supp_size = static_cast<int>(x.support_size());
    for (int m : cards) {
      if (m > supp_size) continue;
      IndexSet a;
      SparseVector pa;
      double ratio;
      if (choose_capped(supp_size, m, kGreedyCap + 1) <= kGreedyCap) {
        GreedyOutcome out = worst_greedy_ratio(space, x, m, t, kGreedyCap);
        a = out.set;
        pa = out.sum;
        ratio = out.ratio;
      } else {
        // tie explosion: fall back to the canonical greedy set (top-m moduli,
        // lowest indices first), still a valid t-greedy set
        std::vector<int> supp = x.support();
        std::sort(supp.begin(), supp.end(), [&x](int p, int q) {
          double vp = std::abs(x.coeff(p)), vq = std::abs(x.coeff(q));
          if (vp != vq) return vp > vq;
          return p < q;
        });
        a = IndexSet(std::vector<int>(supp.begin(), supp.begin() + m));
        pa = project(x, a);
        ratio = space.norm(pa) / nx;
      }
      best.offer(ratio, [&] {
        return make_witness(pa, x, json{{"m", m}, {"t", t}, {"A", a.to_json()}});
      });
    }
  }
  return finish("quasi_greedy", best, false, "canonical+random-vectors");
}

}  // namespace greedylab
