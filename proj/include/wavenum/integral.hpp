#pragma once

#include <cstdint>
#include <vector>

#include "wavenum/multiplicative.hpp"
#include "wavenum/periodic_seq.hpp"

namespace wavenum {

/// An aperiodic window of values indexed by xi in [lo, hi] (inclusive).
/// No extension rule applies.
struct WindowedSeq {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<Complex> values;

  WindowedSeq(std::int64_t lo_, std::int64_t hi_);
  WindowedSeq(std::int64_t lo_, std::int64_t hi_, std::vector<Complex> values_);

  std::size_t size() const { return values.size(); }
  const Complex& at(std::int64_t xi) const;
  Complex& at(std::int64_t xi);
};

/// Element-wise operations on identically-windowed sequences.
WindowedSeq window_product(const WindowedSeq& a, const WindowedSeq& b);
WindowedSeq window_sum(const WindowedSeq& a, const WindowedSeq& b);
WindowedSeq window_dilate(const WindowedSeq& a, Complex rho);

/// Cumulative sums over the principal window: element k is the sum of the
/// first k phases.
PeriodicSeq integral(const PeriodicSeq& s);

/// |I_k| of the partial sums of the samples of w, k = 1..period. For
/// w(m/n,g) these equal |sin(pi*m*k/n) / sin(pi*m/n)|. Requires period >= 2.
std::vector<double> integral_magnitudes(const MultWave& w);

/// One iteration of the n-gon recursion. t = 0 records the seed polygon
/// (unit-length edge vectors, vertex_norm r_0 = 1 by convention); for
/// t >= 1 edge_norm(t) = vertex_norm(t-1) and vertex_norm is the measured
/// circumradius, which follows r_t = r_{t-1} / (2 sin(pi/n)).
struct NGonTrace {
  std::uint32_t t = 0;
  PeriodicSeq vertices;
  double edge_norm = 0.0;
  double vertex_norm = 0.0;
};

/// Traces for t = 0..t_max; vertices are the cumulative sums of the scaled
/// unit roots and include the origin. Requires n >= 3.
std::vector<NGonTrace> iterate_ngon(std::uint32_t n, std::uint32_t t_max);

bool is_zero_sum(const PeriodicSeq& s, Tolerance tol = {});

/// The periodic co-basis pattern *e(1/n) (0 at multiples of n, 1 elsewhere)
/// evaluated over [lo, hi].
WindowedSeq co_basis_window(std::uint32_t n, std::int64_t lo, std::int64_t hi);
/// The complementary re-basis pattern (1 at multiples of n, 0 elsewhere).
WindowedSeq re_basis_window(std::uint32_t n, std::int64_t lo, std::int64_t hi);

/// P_n(1) over [-W, W]: the re-basis of n times the co-basis factors for
/// j = n+1..W. Indicator of xi = +/-n; zero at xi = 0.
WindowedSeq particulate_unit(std::uint32_t n, std::int64_t W);

/// P_n(m): the m-fold sum of P_n(1); value m at xi = +/-n.
WindowedSeq particulate_scale(std::uint32_t n, std::uint32_t m, std::int64_t W);

/// One-sided variant: value q at xi = +n (positive = true) or xi = -n,
/// realized by a sign mask on the scaled symmetric number.
WindowedSeq particulate_one_sided(std::uint32_t n, Complex q, std::int64_t W, bool positive);

}  // namespace wavenum
