#pragma once

#include <cstdint>
#include <vector>

#include "wavenum/multiplicative.hpp"
#include "wavenum/rational.hpp"

namespace wavenum {

/// Circular product of multiplicative wave numbers: the A-th root of their
/// product, A = m1*n2 + m2*n1, giving w(1/(n1*n2), (g1+g2)/A).
/// A = 0 raises DomainError.
MultWave circ_product(const MultWave& a, const MultWave& b);

/// Support pattern of a cumulative co-number product over the window
/// [2, hi]: bit(xi) is false exactly when some modulus divides xi.
struct SupportMask {
  std::int64_t hi = 0;
  std::vector<std::uint64_t> moduli;
  std::vector<bool> bits;  // index xi-2

  bool bit(std::int64_t xi) const;
};

/// Builds the mask for the given moduli (each >= 2) over [2, hi].
SupportMask cum_co_mask(std::vector<std::uint64_t> moduli, std::int64_t hi);

struct SieveState {
  std::vector<std::uint64_t> known_primes;  // sorted, starts with 2
  std::uint64_t frontier = 0;               // classification complete through here
};

struct SieveStepInfo {
  std::uint64_t step = 0;
  std::uint64_t n_moduli = 0;  // number of co-number moduli used
  std::uint64_t p_next = 0;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;  // exclusive
  std::uint64_t found = 0;
  std::uint64_t cum_count = 0;  // pi(frontier) after the step
};

struct SieveStepResult {
  SieveState state;
  std::vector<std::uint64_t> newly_found;
  SieveStepInfo info;
};

/// One application of the prime-phase theorem: with known primes
/// p_1..p_{N+1}, masks multiples of p_1..p_N and reads the nonzero phases
/// in [p_{N+1}, p_{N+1}^2), all of which are prime. Advances the frontier
/// to p_{N+1}^2 - 1. With validate = true the result is checked against a
/// classical sieve and a mismatch raises SieveInvariantViolation.
SieveStepResult sieve_step(const SieveState& state, bool validate = false);

/// Repeats sieve_step until the frontier covers `limit`; returns all
/// primes <= limit. Appends one row per step to `trace` when given.
std::vector<std::uint64_t> discover_primes(std::uint64_t limit,
                                           std::vector<SieveStepInfo>* trace = nullptr);

/// Largest correctly-identifiable prime per iteration: 7, then the largest
/// prime below the square of the previous entry.
std::vector<Int> frontier_sequence(std::uint32_t iterations);

/// Re-number compositeness test: with `primes` the first N primes and
/// p_N < xi < p_{N+1}^2, xi is composite iff some listed prime divides it.
bool renumber_is_composite(std::uint64_t xi, const std::vector<std::uint64_t>& primes);

/// Gauss/Legendre-style bound 7^(2(N-1)) / (2(N-1) ln 7) on the prime
/// phases identifiable at iteration N >= 2.
double count_estimate(std::uint32_t N);

/// Classical sieve of Eratosthenes; the validation oracle.
std::vector<std::uint64_t> eratosthenes(std::uint64_t limit);

}  // namespace wavenum
