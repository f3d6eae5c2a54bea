#include "wavenum/integral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wavenum {

WindowedSeq::WindowedSeq(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw ArgumentError("WindowedSeq: lo must be <= hi");
  values.assign(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
}

WindowedSeq::WindowedSeq(std::int64_t lo_, std::int64_t hi_, std::vector<Complex> values_)
    : lo(lo_), hi(hi_), values(std::move(values_)) {
  if (lo > hi) throw ArgumentError("WindowedSeq: lo must be <= hi");
  if (values.size() != static_cast<std::size_t>(hi - lo + 1)) {
    throw ArgumentError("WindowedSeq: value count does not match window");
  }
}

const Complex& WindowedSeq::at(std::int64_t xi) const {
  if (xi < lo || xi > hi) throw DomainError("WindowedSeq: index outside window");
  return values[static_cast<std::size_t>(xi - lo)];
}

Complex& WindowedSeq::at(std::int64_t xi) {
  if (xi < lo || xi > hi) throw DomainError("WindowedSeq: index outside window");
  return values[static_cast<std::size_t>(xi - lo)];
}

namespace {

void require_same_window(const WindowedSeq& a, const WindowedSeq& b, const char* who) {
  if (a.lo != b.lo || a.hi != b.hi) {
    throw ArgumentError(std::string(who) + ": windows differ");
  }
}

}  // namespace

WindowedSeq window_product(const WindowedSeq& a, const WindowedSeq& b) {
  require_same_window(a, b, "window_product");
  WindowedSeq out(a.lo, a.hi);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = a.values[k] * b.values[k];
  return out;
}

WindowedSeq window_sum(const WindowedSeq& a, const WindowedSeq& b) {
  require_same_window(a, b, "window_sum");
  WindowedSeq out(a.lo, a.hi);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = a.values[k] + b.values[k];
  return out;
}

WindowedSeq window_dilate(const WindowedSeq& a, Complex rho) {
  WindowedSeq out = a;
  for (auto& z : out.values) z *= rho;
  return out;
}

PeriodicSeq integral(const PeriodicSeq& s) {
  std::vector<Complex> v(s.period());
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < s.period(); ++k) {
    acc += s[k];
    v[k] = acc;
  }
  return PeriodicSeq(std::move(v));
}

std::vector<double> integral_magnitudes(const MultWave& w) {
  if (w.period() < 2) {
    throw ArgumentError("integral_magnitudes: period must be >= 2");
  }
  const PeriodicSeq sums = integral(sample(w));
  std::vector<double> out(sums.period());
  for (std::size_t k = 0; k < sums.period(); ++k) out[k] = std::abs(sums[k]);
  return out;
}

std::vector<NGonTrace> iterate_ngon(std::uint32_t n, std::uint32_t t_max) {
  if (n < 3) throw ArgumentError("iterate_ngon: n must be >= 3");
  const PeriodicSeq base = integral(sample(MultWave(Rational(1, n), Rational(0))));

  std::vector<NGonTrace> traces;
  traces.reserve(t_max + 1);
  traces.push_back({0, base, 1.0, 1.0});

  auto circumradius = [](const PeriodicSeq& vertices) {
    Complex c(0.0, 0.0);
    for (const auto& v : vertices.values()) c += v;
    c /= static_cast<double>(vertices.period());
    double r = 0.0;
    for (const auto& v : vertices.values()) r += std::abs(v - c);
    return r / static_cast<double>(vertices.period());
  };

  for (std::uint32_t t = 1; t <= t_max; ++t) {
    const double edge = traces.back().vertex_norm;
    PeriodicSeq vertices = dilate(base, Complex(edge, 0.0));
    const double r = circumradius(vertices);
    traces.push_back({t, std::move(vertices), edge, r});
  }
  return traces;
}

bool is_zero_sum(const PeriodicSeq& s, Tolerance tol) {
  return std::abs(sum_over_period(s)) <= tol.abs_eps;
}

WindowedSeq co_basis_window(std::uint32_t n, std::int64_t lo, std::int64_t hi) {
  if (n < 1) throw ArgumentError("co_basis_window: n must be >= 1");
  WindowedSeq out(lo, hi);
  for (std::int64_t xi = lo; xi <= hi; ++xi) {
    out.at(xi) = xi % static_cast<std::int64_t>(n) == 0 ? Complex(0.0, 0.0) : Complex(1.0, 0.0);
  }
  return out;
}

WindowedSeq re_basis_window(std::uint32_t n, std::int64_t lo, std::int64_t hi) {
  if (n < 1) throw ArgumentError("re_basis_window: n must be >= 1");
  WindowedSeq out(lo, hi);
  for (std::int64_t xi = lo; xi <= hi; ++xi) {
    out.at(xi) = xi % static_cast<std::int64_t>(n) == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  }
  return out;
}

WindowedSeq particulate_unit(std::uint32_t n, std::int64_t W) {
  if (n < 1) throw ArgumentError("particulate_unit: n must be >= 1");
  if (W < static_cast<std::int64_t>(n) + 1) {
    throw ArgumentError("particulate_unit: window bound must be >= n+1");
  }
  WindowedSeq acc = re_basis_window(n, -W, W);
  // The co-basis factor for j differs from 1 only at multiples of j, so the
  // product over j = n+1..W reduces to zeroing those positions.
  for (std::int64_t j = static_cast<std::int64_t>(n) + 1; j <= W; ++j) {
    for (std::int64_t xi = -(W / j) * j; xi <= W; xi += j) {
      acc.at(xi) = Complex(0.0, 0.0);
    }
  }
  return acc;
}

WindowedSeq particulate_scale(std::uint32_t n, std::uint32_t m, std::int64_t W) {
  if (m < 1) throw ArgumentError("particulate_scale: m must be >= 1");
  const WindowedSeq unit = particulate_unit(n, W);
  WindowedSeq acc = unit;
  for (std::uint32_t k = 2; k <= m; ++k) acc = window_sum(acc, unit);
  return acc;
}

WindowedSeq particulate_one_sided(std::uint32_t n, Complex q, std::int64_t W, bool positive) {
  WindowedSeq out = window_dilate(particulate_unit(n, W), q);
  for (std::int64_t xi = out.lo; xi <= out.hi; ++xi) {
    if (positive ? xi < 0 : xi > 0) out.at(xi) = Complex(0.0, 0.0);
  }
  return out;
}

}  // namespace wavenum
