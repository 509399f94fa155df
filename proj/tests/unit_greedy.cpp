#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "greedylab/greedy.hpp"

using namespace greedylab;

namespace {

// every |A| = m subset of supp(x), for post-hoc verification
std::vector<IndexSet> all_subsets(const SparseVector& x, int m) {
  auto supp = x.support();
  int n = static_cast<int>(supp.size());
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(supp[i]);
    out.emplace_back(std::move(elems));
  }
  return out;
}

bool qualifies(const SparseVector& x, const IndexSet& a, double t) {
  double min_in = std::numeric_limits<double>::infinity();
  for (int i : a.elements()) min_in = std::min(min_in, std::abs(x.coeff(i)));
  double max_out = 0.0;
  for (int i : x.support())
    if (!a.contains(i)) max_out = std::max(max_out, std::abs(x.coeff(i)));
  return min_in >= t * max_out;
}

}  // namespace

TEST_CASE("greedy sets on a staircase vector") {
  auto x = SparseVector::from_pairs({{1, 3.0}, {2, 1.0}, {3, -2.0}});
  auto g = greedy_sets(x, 2, 1.0);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == IndexSet({1, 3}));

  auto w = greedy_sets(x, 1, 0.5);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == IndexSet({1}));
  CHECK(w[1] == IndexSet({3}));

  auto all = greedy_sets(x, 3, 1.0);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == IndexSet({1, 2, 3}));
}

TEST_CASE("ties are kept") {
  auto x = SparseVector::from_pairs({{1, 1.0}, {2, -1.0}});
  auto g = greedy_sets(x, 1, 1.0);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == IndexSet({1}));
  CHECK(g[1] == IndexSet({2}));
}

TEST_CASE("edge cases and argument validation") {
  auto x = SparseVector::from_pairs({{1, 1.0}, {2, 2.0}});
  auto empty = greedy_sets(x, 0, 1.0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  CHECK_THROWS_AS(greedy_sets(x, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_sets(x, -1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_sets(x, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_sets(x, 1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(greedy_sets(x, 1, -0.5), std::invalid_argument);

  // tie explosion beyond the cap
  std::vector<std::pair<int, double>> flat;
  for (int i = 1; i <= 16; ++i) flat.emplace_back(i, 1.0);
  auto y = SparseVector::from_pairs(flat);
  CHECK_THROWS_AS(greedy_sets(y, 8, 1.0, 100), std::runtime_error);
}

TEST_CASE("enumeration agrees with the defining inequality") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<int> idx(1, 15);
  std::uniform_real_distribution<double> tdist(0.05, 1.0);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    SparseVector x;
    for (int k = 0; k < 6; ++k) {
      double c = coef(rng);
      if (pick(rng) == 0) c = std::round(c);  // inject ties and zeros
      x.set(idx(rng), c);
    }
    if (x.support_size() < 2) continue;
    int m = 1 + static_cast<int>(rng() % x.support_size());
    double t = tdist(rng);
    auto g = greedy_sets(x, m, t);
    CHECK(!g.empty());
    CHECK(std::is_sorted(g.begin(), g.end()));
    for (const auto& a : g) {
      CHECK(a.size() == static_cast<std::size_t>(m));
      CHECK(qualifies(x, a, t));
    }
    for (const auto& a : all_subsets(x, m)) {
      bool found = std::binary_search(g.begin(), g.end(), a);
      CHECK(found == qualifies(x, a, t));
    }
  }
}

TEST_CASE("t = 1 sets dominate everything outside") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 80; ++trial) {
    SparseVector x;
    for (int k = 0; k < 5; ++k) x.set(1 + static_cast<int>(rng() % 10), coef(rng));
    if (x.support_size() < 2) continue;
    int m = 1 + static_cast<int>(rng() % (x.support_size() - 1));
    for (const auto& a : greedy_sets(x, m, 1.0)) {
      double min_in = std::numeric_limits<double>::infinity();
      for (int i : a.elements()) min_in = std::min(min_in, std::abs(x.coeff(i)));
      for (int i : x.support())
        if (!a.contains(i)) CHECK(std::abs(x.coeff(i)) <= min_in);
    }
  }
}

TEST_CASE("weak greedy sets grow as t shrinks") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    SparseVector x;
    for (int k = 0; k < 5; ++k) x.set(1 + static_cast<int>(rng() % 9), coef(rng));
    if (x.support_size() < 2) continue;
    int m = 1 + static_cast<int>(rng() % x.support_size());
    auto strong = greedy_sets(x, m, 0.9);
    auto weak = greedy_sets(x, m, 0.3);
    for (const auto& a : strong) CHECK(std::binary_search(weak.begin(), weak.end(), a));
  }
}

TEST_CASE("worst greedy ratio") {
  LpSpace l2(2.0);
  auto x = SparseVector::from_pairs({{1, 3.0}, {2, 1.0}, {3, -2.0}});
  auto out = worst_greedy_ratio(l2, x, 2, 1.0);
  CHECK(out.set == IndexSet({1, 3}));
  CHECK(out.ratio == doctest::Approx(std::sqrt(13.0 / 14.0)));
  CHECK(out.sum == project(x, out.set));

  // ties: the maximizing set is reported
  auto y = SparseVector::from_pairs({{1, 1.0}, {2, 1.0}});
  auto one = worst_greedy_ratio(l2, y, 1, 1.0);
  CHECK(one.ratio == doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK_THROWS_AS(worst_greedy_ratio(l2, SparseVector{}, 0, 1.0), std::invalid_argument);
}
