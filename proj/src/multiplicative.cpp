#include "wavenum/multiplicative.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hp_complex.hpp"

namespace wavenum {

namespace {

constexpr std::uint64_t kMaxPeriod = std::uint64_t(1) << 26;

std::uint64_t period_of(const Rational& f) {
  if (f.den() > kMaxPeriod) {
    throw DomainError("wave number period too large to materialize: " + f.den().str());
  }
  return f.den().convert_to<std::uint64_t>();
}

}  // namespace

MultWave::MultWave(Rational f, Rational g) : f_(std::move(f)), g_(g.mod1()) {}

std::uint64_t MultWave::period() const { return period_of(f_); }

std::string MultWave::str() const {
  std::ostringstream os;
  os << "w(" << f_.str() << "," << g_.str() << ")";
  return os.str();
}

Complex unit_phase(const Rational& x) {
  const Rational r = x.mod1();
  // Exact quarter-turn values keep golden output and identity tests clean.
  if (r.den() == 1) return Complex(1.0, 0.0);
  if (r.den() == 2) return Complex(-1.0, 0.0);
  if (r.den() == 4) return r.num() == 1 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
  const double angle = 2.0 * std::numbers::pi * r.to_double();
  return Complex(std::cos(angle), std::sin(angle));
}

PeriodicSeq sample(const MultWave& w) { return sample(w, Precision::Double); }

PeriodicSeq sample(const MultWave& w, Precision prec) {
  const std::uint64_t n = w.period();
  std::vector<Complex> v(n);
  for (std::uint64_t xi = 1; xi <= n; ++xi) {
    const Rational phase = w.f() * Rational(Int(xi), Int(1)) + w.g();
    v[xi - 1] = prec == Precision::High ? detail::to_double(detail::hp_unit_phase(phase))
                                        : unit_phase(phase);
  }
  return PeriodicSeq(std::move(v));
}

MultWave product(const MultWave& a, const MultWave& b) {
  return MultWave(a.f() + b.f(), a.g() + b.g());
}

MultWave inverse(const MultWave& a) { return MultWave(-a.f(), -a.g()); }

MultWave reflect_real(const MultWave& a) { return MultWave(-a.f(), -a.g()); }

MultWave reflect_imag(const MultWave& a) {
  return MultWave(-a.f(), Rational(1, 2) - a.g());
}

MultWave root(const MultWave& a, unsigned n) {
  if (n == 0) throw ArgumentError("root: n must be >= 1");
  const Rational d(Int(n), Int(1));
  return MultWave(a.f() / d, a.g() / d);
}

std::vector<Complex> phases(const MultWave& w) {
  const std::uint64_t n = w.period();
  std::vector<Complex> out(n);
  for (std::uint64_t xi = 1; xi <= n; ++xi) {
    const Int residue = (w.f().num() * Int(xi)) % w.f().den();
    out[xi - 1] = unit_phase(Rational(residue, w.f().den()) + w.g());
  }
  return out;
}

bool is_constant(const MultWave& w) { return w.f().is_integer(); }

bool is_simple(const MultWave& w) { return w.g().den() == w.f().den(); }

std::vector<MultWave> factor_period_prime(const MultWave& w) {
  std::vector<MultWave> factors;
  for (const Rational& t : partial_fractions_mod1(w.f())) {
    factors.emplace_back(t, Rational(0));
  }
  for (const Rational& t : partial_fractions_mod1(w.g())) {
    factors.emplace_back(Rational(0), t);
  }
  if (factors.empty()) factors.emplace_back(Rational(0), Rational(0));
  return factors;
}

}  // namespace wavenum
