#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wavenum/error.hpp"
#include "wavenum/rational.hpp"

namespace wavenum {

using Complex = std::complex<double>;

struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;
};

/// Numeric kernel selection for evaluation paths that support it.
/// High uses ~50 significant decimal digits internally; results are
/// rounded back to double on output.
enum class Precision { Double, High };

/// A periodic sequence of complex values held as its principal window
/// (phase indices xi = 1..period). Element at arbitrary xi in Z is
/// values[(xi-1) mod period].
class PeriodicSeq {
 public:
  explicit PeriodicSeq(std::vector<Complex> values);
  static PeriodicSeq constant(Complex z, std::size_t period = 1);
  static PeriodicSeq zeros(std::size_t period);

  std::size_t period() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }

  /// Principal-window access, k in [0, period).
  const Complex& operator[](std::size_t k) const { return values_[k]; }
  Complex& operator[](std::size_t k) { return values_[k]; }

  /// Extension-rule access for any phase index xi in Z (1-based).
  const Complex& at(std::int64_t xi) const;

 private:
  std::vector<Complex> values_;
};

/// Re-windows both sequences to their combined period; element-wise values
/// are preserved under the extension rule.
std::pair<PeriodicSeq, PeriodicSeq> align(const PeriodicSeq& a, const PeriodicSeq& b);

PeriodicSeq ew_product(const PeriodicSeq& a, const PeriodicSeq& b);
PeriodicSeq ew_sum(const PeriodicSeq& a, const PeriodicSeq& b);
PeriodicSeq ew_difference(const PeriodicSeq& a, const PeriodicSeq& b);
/// Throws DomainError naming the offending phase index when b has a zero
/// element within tol.
PeriodicSeq ew_quotient(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol = {});

PeriodicSeq conjugate(const PeriodicSeq& a);
PeriodicSeq orth_conjugate(const PeriodicSeq& a);

/// Element-wise principal nth root (argument of result in (-pi/n, pi/n]);
/// 0 roots to 0.
PeriodicSeq root_n(const PeriodicSeq& a, unsigned n);

/// Element-wise reciprocal, computed as conj(a) / (a * conj(a)).
PeriodicSeq inverse(const PeriodicSeq& a, Tolerance tol = {});

/// sqrt of the mean squared modulus over the principal window.
double norm(const PeriodicSeq& a);

/// Output element at xi equals input element at xi + xi0.
PeriodicSeq rotate(const PeriodicSeq& a, std::int64_t xi0);

/// Smallest divisor d of the period such that the sequence is d-periodic
/// within tol; values re-windowed to length d.
PeriodicSeq reduce_period(const PeriodicSeq& a, Tolerance tol = {});

Complex sum_over_period(const PeriodicSeq& a);

bool approx_eq(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol = {});
bool approx_eq(Complex a, Complex b, Tolerance tol = {});

PeriodicSeq dilate(const PeriodicSeq& a, Complex rho);
PeriodicSeq translate(const PeriodicSeq& a, Complex c);

inline PeriodicSeq operator*(const PeriodicSeq& a, const PeriodicSeq& b) { return ew_product(a, b); }
inline PeriodicSeq operator+(const PeriodicSeq& a, const PeriodicSeq& b) { return ew_sum(a, b); }
inline PeriodicSeq operator-(const PeriodicSeq& a, const PeriodicSeq& b) { return ew_difference(a, b); }
inline PeriodicSeq operator/(const PeriodicSeq& a, const PeriodicSeq& b) { return ew_quotient(a, b); }

}  // namespace wavenum
