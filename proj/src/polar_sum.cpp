#include "wavenum/polar_sum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wavenum {

namespace {

constexpr Complex kI(0.0, 1.0);

// Samples h(2*pi*(f*xi + g)) over the period of f, h = cos or 2i*sin etc.
template <typename F>
PeriodicSeq sample_trig(const Rational& f, const Rational& g, F&& h) {
  const MultWave probe(f, Rational(0));  // for the period guard
  const std::uint64_t n = probe.period();
  std::vector<Complex> v(n);
  for (std::uint64_t xi = 1; xi <= n; ++xi) {
    v[xi - 1] = h(f * Rational(Int(xi), Int(1)) + g);
  }
  return PeriodicSeq(std::move(v));
}

std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> idx;
  for (unsigned j = 0; mask >> j; ++j) {
    if (mask & (1u << j)) idx.push_back(j + 1);
  }
  return idx;
}

std::vector<PeriodicSeq> align_all(std::span<const PeriodicSeq> seqs) {
  std::vector<Int> periods;
  periods.reserve(seqs.size());
  for (const auto& s : seqs) periods.emplace_back(s.period());
  const auto lambda = combined_period(periods).convert_to<std::size_t>();
  std::vector<PeriodicSeq> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) {
    std::vector<Complex> v(lambda);
    for (std::size_t k = 0; k < lambda; ++k) v[k] = s[k % s.period()];
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

PeriodicSeq PolarForm::reconstruct() const { return ew_product(amplitude, sample(carrier)); }

PolarForm sum2_polar(const MultWave& a, const MultWave& b) {
  const Rational half(1, 2);
  const Rational df = (a.f() - b.f()) * half;
  const Rational dg = (a.g() - b.g()) * half;
  PeriodicSeq amp = sample_trig(df, dg, [](const Rational& x) {
    return Complex(2.0 * unit_phase(x).real(), 0.0);
  });
  return {std::move(amp), MultWave((a.f() + b.f()) * half, (a.g() + b.g()) * half)};
}

PolarForm diff2_polar(const MultWave& a, const MultWave& b) {
  const Rational half(1, 2);
  const Rational df = (a.f() - b.f()) * half;
  const Rational dg = (a.g() - b.g()) * half;
  PeriodicSeq amp = sample_trig(df, dg, [](const Rational& x) {
    return Complex(0.0, 2.0 * unit_phase(x).imag());
  });
  return {std::move(amp), MultWave((a.f() + b.f()) * half, (a.g() + b.g()) * half)};
}

PolarForm polar_decompose_sum(std::span<const ScaledWave> terms) {
  if (terms.empty()) {
    throw ArgumentError("polar_decompose_sum: empty term list");
  }
  Rational fsum(0), gsum(0);
  for (const auto& t : terms) {
    fsum += t.wave.f();
    gsum += t.wave.g();
  }
  const Rational n(Int(terms.size()), Int(1));
  const MultWave carrier(fsum / n, gsum / n);

  PeriodicSeq direct = ew_product(terms[0].coeff, sample(terms[0].wave));
  for (std::size_t j = 1; j < terms.size(); ++j) {
    direct = ew_sum(direct, ew_product(terms[j].coeff, sample(terms[j].wave)));
  }
  // Carrier samples have unit modulus, so the quotient is always defined;
  // zeros of the direct sum become zeros of the amplitude.
  PeriodicSeq amplitude = ew_quotient(direct, sample(carrier));
  return {std::move(amplitude), carrier};
}

std::vector<LogPhase> log_phases(std::span<const ScaledWave> terms, Tolerance tol) {
  if (terms.empty()) {
    throw ArgumentError("log_phases: empty term list");
  }
  std::vector<Int> periods;
  for (const auto& t : terms) {
    periods.emplace_back(t.wave.period());
    periods.emplace_back(t.coeff.period());
  }
  const auto lambda = combined_period(periods).convert_to<std::size_t>();

  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<LogPhase> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    std::vector<Complex> v(lambda);
    for (std::size_t k = 0; k < lambda; ++k) {
      const Complex c = t.coeff[k % t.coeff.period()];
      if (std::abs(c) <= tol.abs_eps) {
        throw DomainError("log_phases: zero coefficient at phase index xi=" + std::to_string(k + 1));
      }
      const Rational lin = t.wave.f() * Rational(Int(k + 1), Int(1)) + t.wave.g();
      v[k] = two_pi * lin.to_double() - kI * std::log(c);
    }
    out.push_back(LogPhase{PeriodicSeq(std::move(v))});
  }
  return out;
}

PeriodicSeq amplitude_recursive(std::span<const LogPhase> logs, Tolerance tol) {
  const std::size_t n = logs.size();
  if (n < 1 || n > 10) {
    throw ArgumentError("amplitude_recursive: need 1 <= N <= 10 terms");
  }
  std::vector<PeriodicSeq> fs;
  fs.reserve(n);
  for (const auto& lp : logs) fs.push_back(lp.value);
  fs = align_all(fs);
  const std::size_t lambda = fs[0].period();

  const unsigned full = (1u << n) - 1u;
  std::vector<std::vector<Complex>> memo(full + 1);
  for (unsigned j = 0; j < n; ++j) {
    memo[1u << j].assign(lambda, Complex(1.0, 0.0));
  }

  // Masks in increasing popcount order so every leave-one-out value exists.
  std::vector<unsigned> order;
  for (unsigned m = 1; m <= full; ++m) {
    if (std::popcount(m) >= 2) order.push_back(m);
  }
  std::sort(order.begin(), order.end(),
            [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  for (unsigned mask : order) {
    const int size = std::popcount(mask);
    const double k = static_cast<double>(size - 1);
    std::vector<Complex> value(lambda);
    for (std::size_t xi = 0; xi < lambda; ++xi) {
      Complex prod(1.0, 0.0);
      for (unsigned m = 0; m < n; ++m) {
        if (!(mask & (1u << m))) continue;
        const unsigned sub = mask & ~(1u << m);
        const Complex a_sub = memo[sub][xi];
        if (std::abs(a_sub) <= tol.abs_eps) {
          std::ostringstream os;
          os << "amplitude recursion: vanishing intermediate amplitude on term subset {";
          const auto idx = mask_indices(sub);
          for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
          os << "} at phase index xi=" << (xi + 1);
          throw DegenerateSubsetError(os.str(), idx);
        }
        Complex theta(0.0, 0.0);
        for (unsigned j = 0; j < n; ++j) {
          if ((mask & (1u << j)) && j != m) theta += fs[j][xi];
        }
        theta = (theta - k * fs[m][xi]) / k;
        const Complex log_a = std::log(a_sub);
        const Complex factor =
            2.0 * std::exp(0.5 * log_a) * std::cos(0.5 * theta - kI * (0.5 * log_a));
        prod *= factor;
      }
      value[xi] = prod == Complex(0.0, 0.0)
                      ? Complex(0.0, 0.0)
                      : std::exp(std::log(prod) / static_cast<double>(size));
    }
    memo[mask] = std::move(value);
  }
  return PeriodicSeq(std::move(memo[full]));
}

namespace {

template <typename F>
PeriodicSeq coherent_combine(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol, F&& f,
                             const char* name) {
  auto [x, y] = align(a, b);
  std::vector<Complex> v(x.period());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (std::abs(x[k]) <= tol.abs_eps || std::abs(y[k]) <= tol.abs_eps) {
      throw DomainError(std::string(name) + ": zero element at phase index xi=" +
                        std::to_string(k + 1));
    }
    const Complex la = std::log(x[k]);
    const Complex lb = std::log(y[k]);
    // Both halves reuse the same principal logs; this is what makes the
    // product form reproduce the element-wise sum exactly.
    const Complex z = (la - lb) * Complex(0.0, -0.5);
    v[k] = f(z) * std::exp(0.5 * (la + lb));
  }
  return PeriodicSeq(std::move(v));
}

}  // namespace

PeriodicSeq sum_via_products(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol) {
  return coherent_combine(a, b, tol, [](Complex z) { return 2.0 * std::cos(z); },
                          "sum_via_products");
}

PeriodicSeq diff_via_products(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol) {
  return coherent_combine(a, b, tol, [](Complex z) { return 2.0 * kI * std::sin(z); },
                          "diff_via_products");
}

MagnitudeForm magnitude_form(const PeriodicSeq& a) {
  std::vector<Complex> mags(a.period()), args(a.period());
  for (std::size_t k = 0; k < a.period(); ++k) {
    const double m = std::abs(a[k]);
    double t = m == 0.0 ? 0.0 : std::arg(a[k]);
    if (t <= -std::numbers::pi) t = std::numbers::pi;  // convention: arg in (-pi, pi]
    mags[k] = Complex(m, 0.0);
    args[k] = Complex(t, 0.0);
  }
  return {PeriodicSeq(std::move(mags)), PeriodicSeq(std::move(args))};
}

std::vector<double> cauchy_demo(std::span<const Rational> f_seq, std::span<const Rational> g_seq,
                                double f0, double g0, std::size_t window) {
  if (window < 1) throw ArgumentError("cauchy_demo: window must be >= 1");
  if (f_seq.size() != g_seq.size()) {
    throw ArgumentError("cauchy_demo: f_seq and g_seq must have equal length");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> out;
  out.reserve(f_seq.size());
  for (std::size_t j = 0; j < f_seq.size(); ++j) {
    double acc = 0.0;
    for (std::size_t xi = 1; xi <= window; ++xi) {
      const Complex approx =
          unit_phase(f_seq[j] * Rational(Int(xi), Int(1)) + g_seq[j]);
      const Complex target = std::polar(1.0, two_pi * (f0 * static_cast<double>(xi) + g0));
      acc += std::norm(approx - target);
    }
    out.push_back(std::sqrt(acc / static_cast<double>(window)));
  }
  return out;
}

}  // namespace wavenum
