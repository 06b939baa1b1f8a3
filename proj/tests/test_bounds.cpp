#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pathlab/bounds.hpp"
#include "pathlab/rng.hpp"

using namespace pathlab;

TEST_CASE("prime powers") {
  std::uint32_t base = 0, exp = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 121}) REQUIRE(is_prime_power(q));
  for (std::uint64_t q : {0, 1, 6, 10, 12, 15, 100}) REQUIRE(!is_prime_power(q));
  REQUIRE(is_prime_power(8, &base, &exp));
  REQUIRE(base == 2);
  REQUIRE(exp == 3);
  REQUIRE(is_prime_power(9, &base, &exp));
  REQUIRE(base == 3);
  REQUIRE(exp == 2);
}

TEST_CASE("beta solver roundtrips") {
  for (int i = 0; i <= 60; ++i) {
    double beta = std::pow(10.0, static_cast<double>(i) / 10.0);  // 1 .. 10^6
    double back = beta_solve(two_beta_log_beta(beta));
    REQUIRE(std::fabs(back - beta) / beta < 1e-9);
  }
  REQUIRE(beta_solve(0.0) == 1.0);
  REQUIRE_THROWS_AS(beta_solve(-1.0), std::invalid_argument);
}

TEST_CASE("beta window") {
  auto w = beta_window(65536.0, 64.0, 0.01, 0.5);
  REQUIRE(w.feasible);
  REQUIRE(w.lo <= w.hi);
  REQUIRE(w.beta_lo <= w.beta_hi);
  double mid = w.beta_mid();
  REQUIRE(mid >= w.beta_lo);
  REQUIRE(mid <= w.beta_hi);
  // Dense p makes the (1/p)log(1/p) cap collapse below the 2log(2e) floor.
  auto bad = beta_window(1000.0, 10.0, 0.9, 0.5);
  REQUIRE(!bad.feasible);
  REQUIRE_THROWS_AS(beta_window(15.0, 10.0, 0.1, 0.5), std::domain_error);
}

TEST_CASE("isolated edge expectation") {
  // C(N,2) p (1-p)^{2(N-2)} at N=10^5, p=1/N.
  double v = expected_isolated_edges(100000, 1e-5);
  REQUIRE(v == Catch::Approx(6766.76).margin(0.5));
  REQUIRE(expected_isolated_edges(10, 0.0) == 0.0);
  REQUIRE(expected_isolated_edges(2, 1.0) == 1.0);
  REQUIRE(expected_isolated_edges(5, 1.0) == 0.0);
}

TEST_CASE("regime classification") {
  auto sub = regime_classify(100000.0, 10.0, 1e-5);
  REQUIRE(sub.regime == Regime::subcritical);
  REQUIRE(sub.lower_bound == Catch::Approx(6766.76).margin(0.5));
  REQUIRE(sub.upper_bound == Catch::Approx(1e-5 * 100000.0 * 99999.0 / 2.0));

  auto t13i = regime_classify(3000.0, 30.0, 0.05);
  REQUIRE(t13i.regime == Regime::t13_i);
  REQUIRE(t13i.lower_bound == Catch::Approx(0.25 * 0.05 * 30 * 3000));  // 1125
  REQUIRE(t13i.upper_bound == Catch::Approx(18.0 * 0.05 * 30 * 3000));

  auto t13ii = regime_classify(65536.0, 64.0, 0.01);
  REQUIRE(t13ii.regime == Regime::t13_ii);
  REQUIRE(t13ii.omega == Catch::Approx(std::log(1024.0) / 0.64));
  REQUIRE(t13ii.lower_bound < t13ii.upper_bound);

  const double N = std::ceil(6.0 * std::exp(12.0));
  auto t14i = regime_classify(N, 6.0, std::pow(N, -1.0 / 15.0));
  REQUIRE(t14i.regime == Regime::t14_i);
  REQUIRE(t14i.lower_bound == Catch::Approx(6.0 * N / 16.0));
  REQUIRE(t14i.upper_bound == Catch::Approx(0.5 * 6.0 * N));

  auto t14ii = regime_classify(N, 6.0, 0.1 * std::pow(N, -1.0 / 15.0));
  REQUIRE(t14ii.regime == Regime::t14_ii);

  auto oos = regime_classify(25.0, 10.0, 0.5);
  REQUIRE(oos.regime == Regime::out_of_scope);
  REQUIRE(std::isinf(oos.upper_bound));
}

TEST_CASE("bands are ordered over random parameters") {
  SplitMix64 rng(77);
  for (int t = 0; t < 20000; ++t) {
    double N = 100.0 + rng.next_unit() * 1e6;
    double n = 2.0 + rng.next_unit() * 100.0;
    double p = std::pow(10.0, -6.0 * rng.next_unit());
    if (!(N > n)) continue;
    auto rep = regime_classify(N, std::floor(n), std::min(p, 1.0));
    REQUIRE(rep.lower_bound <= rep.upper_bound);
  }
}

TEST_CASE("closed forms") {
  REQUIRE(erdos_gallai_max(6.0, 4.0) == 6.0);
  REQUIRE(erdos_gallai_max(6.0, 3.0) == 3.0);
  REQUIRE(chernoff_lower_tail(100.0, 0.5) == Catch::Approx(std::exp(-12.5)));
  REQUIRE_THROWS_AS(chernoff_lower_tail(-1.0, 0.5), std::invalid_argument);
}

TEST_CASE("coloring bound menu") {
  // r = 5 prime: affine bound r+1 = 6.
  auto b = coloring_bounds(500.0, 100.0, 0.004, 4000.0);
  REQUIRE(b.affine_upper.applicable);
  REQUIRE(b.affine_upper.value == 6.0);
  // 2pN = 4.
  REQUIRE(b.random_upper.applicable);
  REQUIRE(b.random_upper.value == Catch::Approx(4.0));
  // eq (5.1): p N^2 / (3 ex).
  REQUIRE(b.eq51_lower.applicable);
  REQUIRE(b.eq51_lower.value == Catch::Approx(0.004 * 500.0 * 500.0 / (3.0 * 4000.0)));
  // omega' = 1/(pn) = 2.5 >= 2 activates the corollary.
  REQUIRE(b.corollary_upper.applicable);
  REQUIRE(b.corollary_upper.value == Catch::Approx(2.0 * 5.0 / 2.5));

  auto no_ex = coloring_bounds(500.0, 100.0, 0.004);
  REQUIRE(!no_ex.eq51_lower.applicable);

  // Large p switches on the r/7 lower bound.
  auto dense = coloring_bounds(7000.0, 100.0, 0.9);
  REQUIRE(dense.lower_r7.applicable);
  REQUIRE(dense.lower_r7.value == Catch::Approx(10.0));
  // Small p switches on the (log w / 24 w) r bound.
  auto sparse = coloring_bounds(7000.0, 100.0, 1e-4);
  REQUIRE(sparse.lower_smallp.applicable);
}
