#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavenum/error.hpp"

namespace wavenum {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms. den >= 1 always; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num, Int den);
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int n) : num_(n), den_(1) {}        // NOLINT

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Fractional part in [0, 1): r - floor(r).
  Rational mod1() const;
  Int floor() const;

  double to_double() const;
  /// "p/q" in lowest terms, or plain "p" when q = 1.
  std::string str() const;

  friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  Int num_;
  Int den_;
};

/// Builds a rational in lowest terms with positive denominator.
/// den = 0 raises ArgumentError.
Rational reduce(Int num, Int den);

/// Parses "p", "p/q", or "-p/q". Throws ArgumentError on malformed input.
Rational parse_rational(const std::string& text);

struct PrimeFactorization {
  /// (prime, exponent) pairs with strictly increasing primes.
  std::vector<std::pair<Int, unsigned>> factors;

  Int reconstruct() const;
};

/// Period of the element-wise product/sum of sequences with the given
/// periods: the running p <- p*d/gcd(p,d) fold, i.e. their lcm.
Int combined_period(std::span<const Int> periods);
Int combined_period(std::initializer_list<Int> periods);

/// Trial-division factorization; requires n >= 2.
PrimeFactorization prime_factorize(const Int& n);

/// Decomposes r (mod 1) into one term m_k / p_k^e_k per prime-power factor
/// of den(r), with sum of terms congruent to r mod 1. den(r) = 1 gives the
/// empty list.
std::vector<Rational> partial_fractions_mod1(const Rational& r);

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct Egcd {
  Int g, x, y;
};
Egcd extended_gcd(Int a, Int b);

/// Inverse of a modulo m (m >= 2, gcd(a,m) = 1).
Int mod_inverse(const Int& a, const Int& m);

}  // namespace wavenum
