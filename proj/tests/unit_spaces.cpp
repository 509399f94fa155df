#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "greedylab/spaces.hpp"

using namespace greedylab;

namespace {

SparseVector ei(int i, double v = 1.0) { return SparseVector::from_pairs({{i, v}}); }

SparseVector random_vec(std::mt19937_64& rng, int max_index, int max_support) {
  std::uniform_int_distribution<int> idx(1, max_index);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  SparseVector x;
  int k = 1 + static_cast<int>(rng() % max_support);
  for (int j = 0; j < k; ++j) x.set(idx(rng), coef(rng));
  return x;
}

void check_norm_axioms(const Space& sp, int max_index, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> scal(-2.5, 2.5);
  for (int trial = 0; trial < 120; ++trial) {
    auto x = random_vec(rng, max_index, 5);
    auto y = random_vec(rng, max_index, 5);
    double nx = sp.norm(x), ny = sp.norm(y);
    CHECK(nx >= 0.0);
    if (x.is_zero())
      CHECK(nx == 0.0);
    else
      CHECK(nx > 0.0);
    double t = scal(rng);
    CHECK(sp.norm(x * t) == doctest::Approx(std::abs(t) * nx).epsilon(1e-12));
    CHECK(sp.norm(x + y) <= nx + ny + 1e-12 * (1.0 + nx + ny));
    if (!x.is_zero()) {
      auto f = sp.norming(x);
      CHECK(f.dot(x) == doctest::Approx(nx).epsilon(1e-9));
      CHECK(std::abs(f.dot(y)) <= ny * (1.0 + 1e-9) + 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("lp norms") {
  LpSpace l1(1.0), l2(2.0), linf(std::numeric_limits<double>::infinity());
  auto x = SparseVector::from_pairs({{1, 3.0}, {4, -4.0}});
  CHECK(l1.norm(x) == doctest::Approx(7.0));
  CHECK(l2.norm(x) == doctest::Approx(5.0));
  CHECK(linf.norm(x) == doctest::Approx(4.0));

  LpSpace l3(3.0);
  CHECK(l3.norm(x) == doctest::Approx(std::pow(27.0 + 64.0, 1.0 / 3.0)));
  CHECK_THROWS_AS(LpSpace(0.5), std::invalid_argument);

  CHECK(l2.schauder_constant().has_value());
  CHECK(*l2.schauder_constant() == doctest::Approx(1.0));

  auto f = l2.norming(x);
  CHECK(f.dot(x) == doctest::Approx(5.0));
  CHECK(f.coeff(1) == doctest::Approx(3.0 / 5.0));
}

TEST_CASE("pq block norm branches") {
  PqBlockParams pp;
  pp.m = 4;
  pp.p = 2.0;
  pp.q = 2.0;
  PqBlockSpace sp(pp);

  // head indicator: the plain sum dominates
  IndexSet head({1, 2, 3, 4});
  CHECK(sp.norm(indicator(head)) == doctest::Approx(4.0));
  // alternating head: sum cancels, the lp block takes over
  CHECK(sp.norm(indicator(head, SignPattern::alternating(head))) == doctest::Approx(2.0));
  // beyond the block the norm coincides with the lq tail
  CHECK(sp.norm(ei(5)) == doctest::Approx(1.0));
  auto tail = SparseVector::from_pairs({{6, 1.0}, {9, -2.0}, {40, 2.0}});
  CHECK(sp.norm(tail) == doctest::Approx(3.0));
  // mixed vector: max of the three branches
  auto mix = SparseVector::from_pairs({{1, 1.0}, {2, -1.0}, {5, 1.5}});
  CHECK(sp.norm(mix) == doctest::Approx(1.5));

  CHECK_THROWS_AS([] { PqBlockParams bad; bad.m = 3; bad.validate(); }(), std::invalid_argument);
}

TEST_CASE("pq strict admissibility") {
  PqBlockParams good{3.01, 1.6, 0.99, 0.25, 512, true};
  CHECK_NOTHROW(good.validate());

  PqBlockParams small = good;
  small.m = 4;  // fails the block-length inequality
  CHECK_THROWS_AS(small.validate(), std::invalid_argument);

  PqBlockParams flipped = good;
  flipped.q = 3.5;  // q > p
  CHECK_THROWS_AS(flipped.validate(), std::invalid_argument);
}

TEST_CASE("functional class supremum via LP") {
  Example51Params ep;
  ep.n_k0 = 1;
  ep.n_k0_plus1 = 2;
  ep.relaxed = true;
  ep.levels.push_back({3, 6, 2, IndexSet({3, 4, 5, 6, 7})});
  Example51Space sp(ep);
  CHECK(sp.weight(0) == doctest::Approx(0.25));

  // budget 2: spend 1 on the free coordinate, split the rest across the
  // zero-sum pair inside B, so f = e_1* + (e_3* - e_4*)/2 and the sup is 4
  auto x = SparseVector::from_pairs({{1, 3.0}, {3, 2.0}});
  CHECK(sp.f_class_sup(0, x) == doctest::Approx(4.0));
  auto [val, f] = sp.f_class_opt(0, x);
  CHECK(val == doctest::Approx(4.0));
  CHECK(f.dot(x) == doctest::Approx(4.0));
  CHECK(f.l1_norm() <= 2.0 + 1e-9);
  double zsum = 0.0;
  for (int j : ep.levels[0].B_i.elements()) zsum += f.coeff(j);
  CHECK(zsum == doctest::Approx(0.0).epsilon(1e-9));

  // constant vectors on B are annihilated by the zero-sum constraint
  CHECK(sp.f_class_sup(0, indicator(ep.levels[0].B_i)) == doctest::Approx(0.0));

  // the norm itself: linf dominates after the 1/4 weight
  CHECK(sp.norm(x) == doctest::Approx(3.0));
  CHECK(sp.norm(ei(1)) == doctest::Approx(1.0));
}

TEST_CASE("example51 parameter validation") {
  Example51Params ep;
  ep.n_k0 = 1;
  ep.n_k0_plus1 = 2;
  ep.relaxed = true;
  ep.levels.push_back({3, 6, 2, IndexSet({3, 4, 5, 6, 7})});
  CHECK_NOTHROW(ep.validate());

  auto bad = ep;
  bad.levels[0].B_i = IndexSet({2, 3, 4, 5, 6});  // min B <= m_i
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = ep;
  bad.levels[0].B_i = IndexSet({3, 4, 5, 6});  // |B| != n_ki + m_i
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = ep;
  bad.relaxed = false;  // fails the strict growth conditions
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("oikhberg toy norms") {
  OikhbergParams op;
  op.levels.push_back({1, 16});
  op.relaxed = true;
  OikhbergSpace sp(op);
  CHECK(op.levels[0].n_lo == 1);  // op is copied; derived fields live in sp
  const auto& lv = sp.params().levels[0];
  CHECK(lv.m_i == 4);
  CHECK(lv.beta_i == 2);
  CHECK(lv.c_i == doctest::Approx(2.0));

  auto x12 = SparseVector::from_pairs({{1, 1.0}, {2, 1.0}});
  CHECK(sp.norm(x12) == doctest::Approx(2.0));  // prefix run beats l2
  auto alt = SparseVector::from_pairs({{1, 1.0}, {2, -1.0}});
  CHECK(sp.norm(alt) == doctest::Approx(std::sqrt(2.0)));  // cancelled, l2 wins
  CHECK(sp.norm(ei(5)) == doctest::Approx(1.0));           // outside the block

  CHECK(sp.theta_sign(1) == 1);
  CHECK(sp.theta_sign(2) == 1);
  CHECK(sp.theta_sign(3) == -1);
  CHECK(sp.theta_sign(4) == 1);
  CHECK(sp.theta_sign(5) == 0);

  // monotone basis: truncation never increases the norm
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = random_vec(rng, 8, 5);
    double nx = sp.norm(x);
    for (int m = 0; m <= 8; ++m) CHECK(sp.norm(partial_sum(x, m)) <= nx + 1e-12);
  }
}

TEST_CASE("oikhberg level derivation") {
  OikhbergParams op;
  op.levels.push_back({1, 16});
  op.levels.push_back({1, 81});
  op.levels.push_back({1, 256});
  op.relaxed = true;
  op.derive_and_validate();
  CHECK(op.levels[0].m_i == 4);
  CHECK(op.levels[1].m_i == 9);
  CHECK(op.levels[2].m_i == 16);
  CHECK(op.levels[0].tilde_m_i == 0);
  CHECK(op.levels[1].tilde_m_i == 4);
  CHECK(op.levels[2].tilde_m_i == 13);
  CHECK(op.levels[1].beta_i == 4);
  CHECK(op.levels[1].c_i == doctest::Approx(3.0));

  OikhbergParams strict = op;
  strict.relaxed = false;  // n_{k_1} = 1 <= 4
  CHECK_THROWS_AS(strict.derive_and_validate(), std::invalid_argument);

  OikhbergParams degenerate;
  degenerate.levels.push_back({1, 2});  // m_i = 1 is too small
  degenerate.relaxed = true;
  CHECK_THROWS_AS(degenerate.derive_and_validate(), std::invalid_argument);
}

TEST_CASE("unconditional variant") {
  OikhbergParams op;
  op.levels.push_back({1, 16});
  op.relaxed = true;
  OikhbergUncondSpace sp(op);
  auto alt = SparseVector::from_pairs({{1, 1.0}, {2, -1.0}});
  CHECK(sp.norm(alt) == doctest::Approx(2.0));  // block l1, signs invisible

  // full sign invariance on the block
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_vec(rng, 6, 4);
    double nx = sp.norm(x);
    SparseVector y;
    for (const auto& [i, c] : x.entries()) y.set(i, (rng() & 1) ? c : -c);
    CHECK(sp.norm(y) == doctest::Approx(nx).epsilon(1e-12));
  }
}

TEST_CASE("alpha measurements") {
  LpSpace l2(2.0);
  auto [a1, a2] = measure_alpha(l2, 20);
  CHECK(a1 == doctest::Approx(1.0));
  CHECK(a2 == doctest::Approx(1.0));

  PqBlockParams pp;
  pp.m = 2;
  PqBlockSpace pq(pp);
  auto [b1, b2] = measure_alpha(pq, 10);
  CHECK(b1 == doctest::Approx(1.0));
  CHECK(b2 >= 1.0 - 1e-12);
}

TEST_CASE("norm axioms and norming validity across all space kinds") {
  check_norm_axioms(LpSpace(1.0), 12, 101);
  check_norm_axioms(LpSpace(2.0), 12, 102);
  check_norm_axioms(LpSpace(3.5), 12, 103);
  check_norm_axioms(LpSpace(std::numeric_limits<double>::infinity()), 12, 104);

  PqBlockParams pp;
  pp.m = 4;
  pp.p = 2.5;
  pp.q = 1.5;
  check_norm_axioms(PqBlockSpace(pp), 10, 105);

  Example51Params ep;
  ep.n_k0 = 1;
  ep.n_k0_plus1 = 2;
  ep.relaxed = true;
  ep.levels.push_back({3, 6, 2, IndexSet({3, 4, 5, 6, 7})});
  check_norm_axioms(Example51Space(ep), 8, 106);

  OikhbergParams op;
  op.levels.push_back({1, 16});
  op.levels.push_back({1, 81});
  op.relaxed = true;
  check_norm_axioms(OikhbergSpace(op), 13, 107);
  check_norm_axioms(OikhbergUncondSpace(op), 13, 108);
}

TEST_CASE("space json round trips") {
  std::vector<json> configs = {
      json{{"space", "lp"}, {"params", {{"p", 2.0}}}},
      json{{"space", "pq_block"}, {"params", {{"p", 2.5}, {"q", 1.5}, {"m", 4}}}},
      json{{"space", "oikhberg"},
           {"params", {{"levels", json::array({{{"n_lo", 1}, {"n_hi", 16}}})}, {"relaxed", true}}}},
  };
  std::mt19937_64 rng(55);
  for (const auto& cj : configs) {
    auto sp = space_from_json(cj);
    auto sp2 = space_from_json(sp->to_json());
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_vec(rng, 8, 4);
      CHECK(sp2->norm(x) == doctest::Approx(sp->norm(x)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(space_from_json(json{{"space", "unknown"}}), std::invalid_argument);
}
