#include <doctest.h>

#include "greedylab/gaps.hpp"

using namespace greedylab;

TEST_CASE("gap sequence construction and extension") {
  GapSequence geo({4}, GapRuleKind::Geometric, 4);  // n_k = 4^k
  CHECK(geo.at(1) == 4);
  CHECK(geo.at(3) == 64);
  CHECK(geo.n1() == 4);
  CHECK(geo.has_rule());

  GapSequence arith({2}, GapRuleKind::Arithmetic, 2);  // n_k = 2k
  CHECK(arith.at(5) == 10);

  GapSequence dexp({4}, GapRuleKind::DoubleExponential, 2);  // n_k = 2^(2^k)
  CHECK(dexp.at(2) == 16);
  CHECK(dexp.at(3) == 256);

  GapSequence fin({3, 7, 9});
  CHECK(fin.terms_available() == 3);
  CHECK_THROWS_AS(fin.at(4), std::out_of_range);

  CHECK_THROWS_AS(GapSequence({4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(GapSequence({9, 4}), std::invalid_argument);
  CHECK_THROWS_AS(GapSequence({0}), std::invalid_argument);
  CHECK_THROWS_AS(GapSequence(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("all_integers helper") {
  auto nat = GapSequence::all_integers();
  CHECK(nat.at(1) == 1);
  CHECK(nat.at(57) == 57);
  CHECK(nat.member(123456));
}

TEST_CASE("classification of standard rules") {
  GapSequence geo({4}, GapRuleKind::Geometric, 4);
  auto cg = classify(geo, 5);
  CHECK(cg.quotient_bound == 4);
  CHECK_FALSE(cg.quotient_trend_unbounded);
  CHECK(cg.additive_trend_unbounded);
  CHECK(cg.inspected_horizon == 5);

  GapSequence arith({2}, GapRuleKind::Arithmetic, 2);
  auto ca = classify(arith, 10);
  CHECK(ca.additive_bound == 2);
  CHECK(ca.quotient_bound == 2);  // worst quotient 4/2 at the front
  CHECK_FALSE(ca.additive_trend_unbounded);

  GapSequence dexp({4}, GapRuleKind::DoubleExponential, 2);
  auto cd = classify(dexp, 4);
  CHECK(cd.quotient_trend_unbounded);

  CHECK_THROWS_AS(classify(arith, 1), std::invalid_argument);
  CHECK_THROWS_AS(classify(GapSequence({3, 7, 9}), 4), std::out_of_range);
}

TEST_CASE("classification bounds are monotone in the horizon") {
  GapSequence n({2, 5, 7}, GapRuleKind::Geometric, 3);
  GapClassification prev = classify(n, 2);
  for (int K = 3; K <= 10; ++K) {
    auto cur = classify(n, K);
    CHECK(cur.quotient_bound >= prev.quotient_bound);
    CHECK(cur.additive_bound >= prev.additive_bound);
    prev = cur;
  }
}

TEST_CASE("k0_below and membership") {
  GapSequence n({2, 4, 8}, GapRuleKind::Geometric, 2);
  CHECK(n.k0_below(5) == 2);
  CHECK(n.k0_below(8) == 2);
  CHECK(n.k0_below(9) == 3);
  CHECK_THROWS_AS(n.k0_below(2), std::invalid_argument);

  CHECK(n.member(2));
  CHECK(n.member(64));
  CHECK_FALSE(n.member(6));
  CHECK_FALSE(n.member(1));

  // n_{k0} < m <= n_{k0+1} whenever m > n_1
  for (std::int64_t m = 3; m <= 200; ++m) {
    int k0 = n.k0_below(m);
    CHECK(n.at(k0) < m);
    CHECK(m <= n.at(k0 + 1));
  }
}

TEST_CASE("values_up_to") {
  GapSequence n({2, 4, 8}, GapRuleKind::Geometric, 2);
  CHECK(n.values_up_to(20) == std::vector<std::int64_t>{2, 4, 8, 16});
  CHECK(n.values_up_to(1).empty());

  GapSequence fin({5, 11});
  CHECK(fin.values_up_to(100) == std::vector<std::int64_t>{5, 11});
}

TEST_CASE("terms_available guards overflow") {
  GapSequence dexp({4}, GapRuleKind::DoubleExponential, 2);
  int avail = dexp.terms_available();
  CHECK(avail >= 4);
  CHECK(avail < 10);  // 2^(2^k) overflows int64 quickly
  CHECK(dexp.at(avail) > 0);
  CHECK_THROWS_AS(dexp.at(avail + 1), std::overflow_error);

  GapSequence nat = GapSequence::all_integers();
  CHECK(nat.terms_available() == 64);
  CHECK(nat.terms_available(7) == 7);
}

TEST_CASE("gap sequence json round trip") {
  GapSequence n({3, 9}, GapRuleKind::Geometric, 3);
  auto n2 = GapSequence::from_json(n.to_json());
  CHECK(n2.at(4) == n.at(4));
  CHECK(n2.has_rule());

  GapSequence fin({1, 6, 14});
  auto f2 = GapSequence::from_json(fin.to_json());
  CHECK(f2.prefix() == fin.prefix());
  CHECK_FALSE(f2.has_rule());
}
