#include <doctest.h>

#include <algorithm>
#include <random>

#include "wavenum/sieve.hpp"

using namespace wavenum;

TEST_CASE("circular product parameter formula") {
  const MultWave h(Rational(1, 2), Rational(0));
  const MultWave t(Rational(1, 3), Rational(0));
  CHECK(circ_product(h, t) == MultWave(Rational(1, 6), Rational(0)));

  // against the definition: R_5 applied to the plain product
  CHECK(root(product(h, t), 5) == circ_product(h, t));

  CHECK(circ_product(h, h) == MultWave(Rational(1, 4), Rational(0)));

  const MultWave hr(Rational(1, 2), Rational(1, 2));
  CHECK(circ_product(hr, t) == MultWave(Rational(1, 6), Rational(1, 10)));

  CHECK_THROWS_AS(circ_product(h, MultWave(Rational(-1, 2), Rational(0))), DomainError);
}

TEST_CASE("cumulative co-number mask") {
  const auto m2 = cum_co_mask({2}, 9);
  for (std::int64_t xi = 2; xi <= 9; ++xi) CHECK(m2.bit(xi) == (xi % 2 != 0));

  const auto m23 = cum_co_mask({2, 3}, 12);
  const std::vector<std::int64_t> zeros = {2, 3, 4, 6, 8, 9, 10, 12};
  for (std::int64_t xi = 2; xi <= 12; ++xi) {
    const bool is_zero = std::find(zeros.begin(), zeros.end(), xi) != zeros.end();
    CHECK(m23.bit(xi) == !is_zero);
  }

  // a modulus whose zeros are a subset of an earlier one changes nothing
  const auto m234 = cum_co_mask({2, 3, 4}, 12);
  for (std::int64_t xi = 2; xi <= 12; ++xi) CHECK(m234.bit(xi) == m23.bit(xi));

  CHECK_THROWS_AS(cum_co_mask({1}, 5), ArgumentError);
  CHECK_THROWS_AS(cum_co_mask({7}, 5), ArgumentError);
}

TEST_CASE("mask equals divisibility over a large window") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint64_t> moduli;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) moduli.push_back(2 + rng() % 30);
    const auto mask = cum_co_mask(moduli, 10000);
    for (std::int64_t xi = 2; xi <= 10000; ++xi) {
      bool divisible = false;
      for (std::uint64_t m : moduli) {
        if (xi % static_cast<std::int64_t>(m) == 0) divisible = true;
      }
      CHECK(mask.bit(xi) == !divisible);
    }
  }
}

TEST_CASE("prime-only reduction of the cumulative product") {
  for (std::uint64_t N = 2; N <= 100; ++N) {
    std::vector<std::uint64_t> all, primes;
    for (std::uint64_t m = 2; m <= N; ++m) all.push_back(m);
    for (std::uint64_t p : eratosthenes(N)) primes.push_back(p);
    const auto ma = cum_co_mask(all, 500);
    const auto mp = cum_co_mask(primes, 500);
    CHECK(ma.bits == mp.bits);
  }
}

TEST_CASE("sieve_step on the worked corollary") {
  const SieveState start{{2, 3}, 3};
  const auto r = sieve_step(start);
  CHECK(r.newly_found == std::vector<std::uint64_t>{3, 5, 7});
  CHECK(r.state.known_primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(r.state.frontier == 8);
  CHECK(r.info.p_next == 3);
  CHECK(r.info.range_lo == 3);
  CHECK(r.info.range_hi == 9);

  const SieveState mid{{2, 3, 5}, 8};
  const auto r2 = sieve_step(mid);
  CHECK(r2.newly_found == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23});

  CHECK_THROWS_AS(sieve_step(SieveState{{3, 5}, 5}), ArgumentError);
}

TEST_CASE("sieve_step validation mode agrees with the oracle") {
  SieveState state{{2, 3}, 3};
  while (state.frontier < 100000) {
    auto r = sieve_step(state, /*validate=*/true);
    state = std::move(r.state);
  }
  CHECK(state.known_primes.size() >= 9592);
}

TEST_CASE("discover_primes matches eratosthenes") {
  CHECK(discover_primes(3) == std::vector<std::uint64_t>{2, 3});
  CHECK(discover_primes(30) == eratosthenes(30));
  CHECK(discover_primes(1000) == eratosthenes(1000));
  CHECK(discover_primes(10000) == eratosthenes(10000));
  CHECK_THROWS_AS(discover_primes(2), ArgumentError);

  std::vector<SieveStepInfo> trace;
  discover_primes(100, &trace);
  REQUIRE(trace.size() >= 2);
  CHECK(trace[0].step == 1);
  CHECK(trace[0].found == 3);
  CHECK(trace[1].p_next == 7);
}

TEST_CASE("frontier sequence") {
  CHECK(frontier_sequence(1) == std::vector<Int>{Int(7)});
  CHECK(frontier_sequence(2) == std::vector<Int>{Int(7), Int(47)});
  CHECK(frontier_sequence(3) == std::vector<Int>{Int(7), Int(47), Int(2203)});
  CHECK_THROWS_AS(frontier_sequence(0), ArgumentError);
}

TEST_CASE("re-number compositeness test") {
  CHECK(!renumber_is_composite(7, {2}));
  CHECK(renumber_is_composite(9, {2, 3}));
  CHECK(!renumber_is_composite(23, {2, 3}));
  CHECK_THROWS_AS(renumber_is_composite(2, {2}), DomainError);
  CHECK_THROWS_AS(renumber_is_composite(30, {2, 3}), DomainError);
  CHECK_THROWS_AS(renumber_is_composite(10, {2, 5}), ArgumentError);
}

TEST_CASE("count estimate") {
  CHECK(count_estimate(2) == doctest::Approx(12.5906).epsilon(1e-3));
  CHECK(count_estimate(3) == doctest::Approx(308.46).epsilon(1e-3));
  double prev = count_estimate(2);
  for (std::uint32_t n = 3; n <= 12; ++n) {
    CHECK(count_estimate(n) > prev);
    prev = count_estimate(n);
  }
  CHECK_THROWS_AS(count_estimate(1), ArgumentError);
}

TEST_CASE("eratosthenes oracle") {
  CHECK(eratosthenes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(eratosthenes(2) == std::vector<std::uint64_t>{2});
  CHECK(eratosthenes(100000).size() == 9592);
  CHECK_THROWS_AS(eratosthenes(1), ArgumentError);
}
