#pragma once

#include <string>
#include <vector>

#include "wavenum/periodic_seq.hpp"
#include "wavenum/rational.hpp"

namespace wavenum {

/// The multiplicative wave number w(f,g): the sequence exp(2*pi*i*(f*xi + g))
/// with rational frequency f and rotation g (both in cycles). g is stored
/// normalized into [0,1); two values are equal iff the reduced parameters
/// match after that normalization. The period is den(f).
class MultWave {
 public:
  MultWave() = default;  // w(0,0), the identity
  MultWave(Rational f, Rational g);

  const Rational& f() const { return f_; }
  const Rational& g() const { return g_; }

  /// den(f) as a machine integer; throws if it cannot be materialized.
  std::uint64_t period() const;

  std::string str() const;  // "w(f,g)"

  friend bool operator==(const MultWave& a, const MultWave& b) {
    return a.f_ == b.f_ && a.g_ == b.g_;
  }
  friend bool operator!=(const MultWave& a, const MultWave& b) { return !(a == b); }

 private:
  Rational f_;
  Rational g_;
};

/// e^(2*pi*i*x) for rational x, evaluated from the exact fractional part.
/// Quarter-turn points come out bit-exact (1, i, -1, -i).
Complex unit_phase(const Rational& x);

/// Principal sequence of w over its period.
PeriodicSeq sample(const MultWave& w);
/// Same, with the numeric kernel chosen by `prec` (High evaluates the
/// trigonometry at ~50 digits before rounding back to double).
PeriodicSeq sample(const MultWave& w, Precision prec);

MultWave product(const MultWave& a, const MultWave& b);
MultWave inverse(const MultWave& a);
MultWave reflect_real(const MultWave& a);  // M_R: element-wise conjugate
MultWave reflect_imag(const MultWave& a);  // M_I: element-wise -conjugate
MultWave root(const MultWave& a, unsigned n);

inline MultWave operator*(const MultWave& a, const MultWave& b) { return product(a, b); }

/// The n distinct phase values, in phase-index order xi = 1..n.
std::vector<Complex> phases(const MultWave& w);

bool is_constant(const MultWave& w);  // single phase: den(f) = 1
bool is_simple(const MultWave& w);    // den(g) = den(f)

/// Factors w into wave numbers of prime-power period (frequency parts) and
/// constant wave numbers of prime-power rotation denominator (rotation
/// parts), in increasing prime order. The product reconstructs w up to the
/// mod-1 parameter normalization (sample-equal).
std::vector<MultWave> factor_period_prime(const MultWave& w);

}  // namespace wavenum
