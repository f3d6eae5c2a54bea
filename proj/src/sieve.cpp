#include "wavenum/sieve.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace wavenum {

MultWave circ_product(const MultWave& a, const MultWave& b) {
  const Int& m1 = a.f().num();
  const Int& n1 = a.f().den();
  const Int& m2 = b.f().num();
  const Int& n2 = b.f().den();
  const Int A = m1 * n2 + m2 * n1;
  if (A == 0) {
    throw DomainError("circ_product: degenerate product (m1*n2 + m2*n1 = 0)");
  }
  return MultWave(Rational(Int(1), n1 * n2), (a.g() + b.g()) / Rational(A, Int(1)));
}

bool SupportMask::bit(std::int64_t xi) const {
  if (xi < 2 || xi > hi) throw DomainError("SupportMask: index outside [2, hi]");
  return bits[static_cast<std::size_t>(xi - 2)];
}

SupportMask cum_co_mask(std::vector<std::uint64_t> moduli, std::int64_t hi) {
  for (std::uint64_t m : moduli) {
    if (m < 2) throw ArgumentError("cum_co_mask: moduli must be >= 2");
    if (hi < static_cast<std::int64_t>(m)) {
      throw ArgumentError("cum_co_mask: hi must cover every modulus");
    }
  }
  SupportMask mask;
  mask.hi = hi;
  mask.moduli = std::move(moduli);
  mask.bits.assign(static_cast<std::size_t>(hi - 1), true);
  for (std::uint64_t m : mask.moduli) {
    for (std::int64_t xi = static_cast<std::int64_t>(m); xi <= hi;
         xi += static_cast<std::int64_t>(m)) {
      mask.bits[static_cast<std::size_t>(xi - 2)] = false;
    }
  }
  return mask;
}

SieveStepResult sieve_step(const SieveState& state, bool validate) {
  const auto& known = state.known_primes;
  if (known.empty() || known.front() != 2 || !std::is_sorted(known.begin(), known.end())) {
    throw ArgumentError("sieve_step: known_primes must be sorted and begin with 2");
  }
  const std::uint64_t p_next = known.back();
  if (p_next > (std::uint64_t(1) << 31)) {
    throw DomainError("sieve_step: range bound overflows");
  }
  const std::uint64_t range_hi = p_next * p_next;  // exclusive

  std::vector<std::uint64_t> moduli(known.begin(), known.end() - 1);
  std::vector<std::uint64_t> newly;
  if (moduli.empty()) {
    // Seed step: nothing masked, the whole range is prime candidates.
    for (std::uint64_t xi = p_next; xi < range_hi; ++xi) newly.push_back(xi);
  } else {
    const SupportMask mask = cum_co_mask(moduli, static_cast<std::int64_t>(range_hi - 1));
    for (std::uint64_t xi = p_next; xi < range_hi; ++xi) {
      if (mask.bit(static_cast<std::int64_t>(xi))) newly.push_back(xi);
    }
  }

  if (validate) {
    const auto oracle = eratosthenes(range_hi - 1);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t p : oracle) {
      if (p >= p_next) expected.push_back(p);
    }
    if (newly != expected) {
      throw SieveInvariantViolation("sieve_step: range [" + std::to_string(p_next) + "," +
                                    std::to_string(range_hi) + ") disagrees with oracle");
    }
  }

  SieveStepResult out;
  out.state.known_primes = known;
  for (std::uint64_t p : newly) {
    if (p > known.back()) out.state.known_primes.push_back(p);
  }
  out.state.frontier = range_hi - 1;
  out.info = SieveStepInfo{0,
                           static_cast<std::uint64_t>(moduli.size()),
                           p_next,
                           p_next,
                           range_hi,
                           static_cast<std::uint64_t>(newly.size()),
                           static_cast<std::uint64_t>(out.state.known_primes.size())};
  out.newly_found = std::move(newly);
  return out;
}

std::vector<std::uint64_t> discover_primes(std::uint64_t limit,
                                           std::vector<SieveStepInfo>* trace) {
  if (limit < 3) throw ArgumentError("discover_primes: limit must be >= 3");
  SieveState state{{2, 3}, 3};
  std::uint64_t step = 0;
  while (state.frontier < limit) {
    SieveStepResult r = sieve_step(state);
    state = std::move(r.state);
    if (trace) {
      r.info.step = ++step;
      trace->push_back(r.info);
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : state.known_primes) {
    if (p <= limit) out.push_back(p);
  }
  return out;
}

namespace {

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(n, 50);
}

Int largest_prime_below(const Int& bound) {
  Int c = bound - 1;
  if (c >= 2 && c % 2 == 0) --c;
  while (c >= 2) {
    if (is_probable_prime(c)) return c;
    c -= 2;
  }
  throw DomainError("largest_prime_below: no prime below " + bound.str());
}

}  // namespace

std::vector<Int> frontier_sequence(std::uint32_t iterations) {
  if (iterations < 1) throw ArgumentError("frontier_sequence: iterations must be >= 1");
  std::vector<Int> out;
  out.reserve(iterations);
  out.emplace_back(7);
  for (std::uint32_t k = 1; k < iterations; ++k) {
    out.push_back(largest_prime_below(out.back() * out.back()));
  }
  return out;
}

bool renumber_is_composite(std::uint64_t xi, const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw ArgumentError("renumber_is_composite: empty prime list");
  const auto first = eratosthenes(primes.back());
  if (first != primes) {
    throw ArgumentError("renumber_is_composite: list is not the first N primes");
  }
  // Validity range (p_N, p_{N+1}^2).
  std::uint64_t p_next = primes.back() + 1;
  while (true) {
    bool composite = false;
    for (std::uint64_t p : primes) {
      if (p * p > p_next) break;
      if (p_next % p == 0) {
        composite = true;
        break;
      }
    }
    if (!composite) break;
    ++p_next;
  }
  if (xi <= primes.back() || xi >= p_next * p_next) {
    throw DomainError("renumber_is_composite: xi=" + std::to_string(xi) +
                      " outside validity range (" + std::to_string(primes.back()) + "," +
                      std::to_string(p_next * p_next) + ")");
  }
  for (std::uint64_t p : primes) {
    if (xi % p == 0) return true;
  }
  return false;
}

double count_estimate(std::uint32_t N) {
  if (N < 2) throw ArgumentError("count_estimate: N must be >= 2");
  const double k = 2.0 * (static_cast<double>(N) - 1.0);
  return std::pow(7.0, k) / (k * std::log(7.0));
}

std::vector<std::uint64_t> eratosthenes(std::uint64_t limit) {
  if (limit < 2) throw ArgumentError("eratosthenes: limit must be >= 2");
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

}  // namespace wavenum
