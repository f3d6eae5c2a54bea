#include "wavenum/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <sstream>

namespace wavenum {

using boost::multiprecision::gcd;

Rational::Rational(Int num, Int den) {
  if (den == 0) {
    throw ArgumentError("invalid rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const Int g = gcd(abs(num), den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::mod1() const {
  Int f = floor();
  return Rational(num_ - f * den_, den_);
}

Int Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  // round toward -inf
  return -(((-num_) + den_ - 1) / den_);
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw DomainError("rational division by zero");
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational reduce(Int num, Int den) { return Rational(std::move(num), std::move(den)); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text), Int(1));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ArgumentError("malformed rational: '" + text + "'");
  }
}

Int PrimeFactorization::reconstruct() const {
  Int n = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned k = 0; k < e; ++k) n *= p;
  }
  return n;
}

Int combined_period(std::span<const Int> periods) {
  if (periods.empty()) {
    throw ArgumentError("combined_period: empty period list");
  }
  Int p = 1;
  for (const Int& d : periods) {
    if (d < 1) throw ArgumentError("combined_period: periods must be >= 1");
    p = p * d / gcd(p, d);
  }
  return p;
}

Int combined_period(std::initializer_list<Int> periods) {
  std::vector<Int> v(periods);
  return combined_period(std::span<const Int>(v));
}

PrimeFactorization prime_factorize(const Int& n) {
  if (n < 2) {
    throw ArgumentError("prime_factorize: argument must be >= 2");
  }
  PrimeFactorization out;
  Int m = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };
  strip(2);
  for (Int p = 3; p * p <= m; p += 2) strip(p);
  if (m > 1) out.factors.emplace_back(m, 1u);
  return out;
}

std::vector<Rational> partial_fractions_mod1(const Rational& r) {
  const Rational x = r.mod1();
  if (x.den() == 1) return {};
  const PrimeFactorization pf = prime_factorize(x.den());
  std::vector<Rational> terms;
  terms.reserve(pf.factors.size());
  const Int& n = x.den();
  for (const auto& [p, e] : pf.factors) {
    Int q = 1;
    for (unsigned k = 0; k < e; ++k) q *= p;
    const Int rest = n / q;
    Int m = (x.num() % q) * mod_inverse(rest % q, q) % q;
    if (m < 0) m += q;
    terms.emplace_back(m, q);
  }
  return terms;
}

Egcd extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

Int mod_inverse(const Int& a, const Int& m) {
  const Egcd e = extended_gcd(a % m, m);
  if (e.g != 1 && e.g != -1) {
    throw ArgumentError("mod_inverse: arguments not coprime");
  }
  Int x = e.x % m;
  if (e.g == -1) x = -x;
  if (x < 0) x += m;
  return x;
}

}  // namespace wavenum
