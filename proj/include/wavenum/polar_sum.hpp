#pragma once

#include <span>
#include <vector>

#include "wavenum/multiplicative.hpp"
#include "wavenum/periodic_seq.hpp"

namespace wavenum {

/// The decomposition A * w(f,g): a w-free amplitude sequence times a
/// multiplicative carrier.
struct PolarForm {
  PeriodicSeq amplitude;
  MultWave carrier;

  /// ew_product(amplitude, sample(carrier)).
  PeriodicSeq reconstruct() const;
};

/// One term C * w(f,g) of a finite sum.
struct ScaledWave {
  PeriodicSeq coeff;
  MultWave wave;
};

/// The complex log-phase F = 2*pi*(f*xi + g) - i*ln(C), sampled over a
/// common window. exp(i*value) must be finite and nonzero element-wise.
struct LogPhase {
  PeriodicSeq value;
};

/// Sum of two multiplicative wave numbers in polar form:
/// amplitude 2*cos(2*pi*((f1-f2)/2*xi + (g1-g2)/2)), carrier
/// w((f1+f2)/2, (g1+g2)/2).
PolarForm sum2_polar(const MultWave& a, const MultWave& b);
/// Difference, with amplitude 2*i*sin(...) instead.
PolarForm diff2_polar(const MultWave& a, const MultWave& b);

/// Polar form of a finite sum of scaled multiplicative wave numbers.
/// Carrier parameters are the exact arithmetic means of the inputs'; the
/// amplitude is the direct element-wise sum divided by the carrier samples
/// (which never vanish), so reconstruction is exact by construction.
PolarForm polar_decompose_sum(std::span<const ScaledWave> terms);

/// Builds the log-phases F_j of the terms over their combined period.
/// Coefficients must be nonzero element-wise.
std::vector<LogPhase> log_phases(std::span<const ScaledWave> terms, Tolerance tol = {});

/// The N-term amplitude A_N computed by the memoized leave-one-out subset
/// recursion. Agrees with |polar_decompose_sum amplitude| element-wise up
/// to an N-th root of unity factor per element. N <= 10; a vanishing
/// intermediate subset amplitude raises DegenerateSubsetError.
PeriodicSeq amplitude_recursive(std::span<const LogPhase> logs, Tolerance tol = {});

/// a (+) b computed as 2*cos((1/i)*ln(a/b)^(1/2)) * (a*b)^(1/2) with both
/// half-logs taken from the same principal log evaluations per element,
/// which makes the identity exact up to round-off. Elements of a and b
/// must be nonzero.
PeriodicSeq sum_via_products(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol = {});
/// a (-) b via 2*i*sin of the same coherent half-log.
PeriodicSeq diff_via_products(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol = {});

/// Element-wise modulus and argument, args in (-pi, pi] with arg(0) = 0.
struct MagnitudeForm {
  PeriodicSeq mags;
  PeriodicSeq args;
};
MagnitudeForm magnitude_form(const PeriodicSeq& a);

/// Windowed norms of w(f_n, g_n) (-) w(f0, g0) over xi = 1..window, one
/// entry per parameter pair; callers inspect the decay.
std::vector<double> cauchy_demo(std::span<const Rational> f_seq, std::span<const Rational> g_seq,
                                double f0, double g0, std::size_t window);

}  // namespace wavenum
