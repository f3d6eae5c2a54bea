#pragma once

#include <cstdint>
#include <vector>

#include "wavenum/polar_sum.hpp"

namespace wavenum {

/// Norm of the element-wise sum of the terms over the combined period;
/// zero within tolerance exactly when the equation sum C_j w_j = 0 holds.
double residual(std::span<const ScaledWave> terms);

/// The family of exact cancellations of w(f1,g1) (+) w(f2,g2) = 0:
/// f1 = f2 + df + k (k in Z) and g1 = g2 + dg + l (l in Z), with the
/// representatives df = 0, dg = 1/2.
struct TwoTermSolution {
  Rational f2, g2;
  Rational df, dg;

  /// The family member w(f2 + df + k, g2 + dg + l).
  MultWave member(long long k = 0, long long l = 0) const;
};

TwoTermSolution solve_two_term(const Rational& f2, const Rational& g2);

/// The N factor sequences of the zero condition for sum C_j w_j = 0,
/// evaluated at the given candidate term assignment, plus the (1-based)
/// indices of factors that vanish element-wise within tolerance.
struct FactoredConditions {
  std::vector<PeriodicSeq> factors;
  std::vector<std::size_t> vanishing;
};

/// Requires 3 <= N <= 8. Degenerate intermediate amplitudes raise
/// DegenerateSubsetError.
FactoredConditions factored_conditions(std::span<const ScaledWave> terms, Tolerance tol = {});

/// Element-wise quadratic-formula roots of C w^2 (+) (D (-) A) w (-) B = 0,
/// the fixed-point condition of the Mobius map (A w + B) / (C w + D).
struct QuadraticRoots {
  PeriodicSeq plus;
  PeriodicSeq minus;
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  bool double_root = false;
};

/// C must be nonzero element-wise. Principal square root of the
/// discriminant; both sign choices returned with their residuals.
QuadraticRoots mobius_fixed_points(const PeriodicSeq& A, const PeriodicSeq& B,
                                   const PeriodicSeq& C, const PeriodicSeq& D,
                                   Tolerance tol = {});

}  // namespace wavenum
