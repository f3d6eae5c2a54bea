#include "wavenum/periodic_seq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wavenum {

namespace {

// Hard cap on materialized window length; combined periods past this point
// indicate caller error rather than a feasible computation.
constexpr std::int64_t kMaxMaterializedPeriod = std::int64_t(1) << 26;

bool is_zero_within(Complex z, const Tolerance& tol) {
  return std::abs(z) <= tol.abs_eps;
}

}  // namespace

PeriodicSeq::PeriodicSeq(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw ArgumentError("PeriodicSeq: period must be >= 1");
  }
}

PeriodicSeq PeriodicSeq::constant(Complex z, std::size_t period) {
  return PeriodicSeq(std::vector<Complex>(period, z));
}

PeriodicSeq PeriodicSeq::zeros(std::size_t period) {
  return constant(Complex(0.0, 0.0), period);
}

const Complex& PeriodicSeq::at(std::int64_t xi) const {
  const auto lambda = static_cast<std::int64_t>(values_.size());
  std::int64_t k = (xi - 1) % lambda;
  if (k < 0) k += lambda;
  return values_[static_cast<std::size_t>(k)];
}

std::pair<PeriodicSeq, PeriodicSeq> align(const PeriodicSeq& a, const PeriodicSeq& b) {
  const Int p = combined_period({Int(a.period()), Int(b.period())});
  if (p > kMaxMaterializedPeriod) {
    throw DomainError("align: combined period too large to materialize (" + p.str() + ")");
  }
  const auto lambda = p.convert_to<std::size_t>();
  auto extend = [lambda](const PeriodicSeq& s) {
    std::vector<Complex> v(lambda);
    for (std::size_t k = 0; k < lambda; ++k) v[k] = s[k % s.period()];
    return PeriodicSeq(std::move(v));
  };
  return {extend(a), extend(b)};
}

namespace {

template <typename F>
PeriodicSeq zip(const PeriodicSeq& a, const PeriodicSeq& b, F&& f) {
  auto [x, y] = align(a, b);
  std::vector<Complex> v(x.period());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(x[k], y[k], k);
  return PeriodicSeq(std::move(v));
}

}  // namespace

PeriodicSeq ew_product(const PeriodicSeq& a, const PeriodicSeq& b) {
  return zip(a, b, [](Complex x, Complex y, std::size_t) { return x * y; });
}

PeriodicSeq ew_sum(const PeriodicSeq& a, const PeriodicSeq& b) {
  return zip(a, b, [](Complex x, Complex y, std::size_t) { return x + y; });
}

PeriodicSeq ew_difference(const PeriodicSeq& a, const PeriodicSeq& b) {
  return zip(a, b, [](Complex x, Complex y, std::size_t) { return x - y; });
}

PeriodicSeq ew_quotient(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol) {
  return zip(a, b, [&](Complex x, Complex y, std::size_t k) {
    if (is_zero_within(y, tol)) {
      throw DomainError("division by zero element at phase index xi=" + std::to_string(k + 1));
    }
    return x / y;
  });
}

PeriodicSeq conjugate(const PeriodicSeq& a) {
  std::vector<Complex> v(a.values());
  for (auto& z : v) z = std::conj(z);
  return PeriodicSeq(std::move(v));
}

PeriodicSeq orth_conjugate(const PeriodicSeq& a) {
  std::vector<Complex> v(a.values());
  for (auto& z : v) z = -std::conj(z);
  return PeriodicSeq(std::move(v));
}

PeriodicSeq root_n(const PeriodicSeq& a, unsigned n) {
  if (n == 0) throw ArgumentError("root_n: n must be >= 1");
  if (n == 1) return a;
  std::vector<Complex> v(a.values());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (auto& z : v) {
    if (z == Complex(0.0, 0.0)) continue;
    z = std::exp(std::log(z) * inv_n);
  }
  return PeriodicSeq(std::move(v));
}

PeriodicSeq inverse(const PeriodicSeq& a, Tolerance tol) {
  return ew_quotient(conjugate(a), ew_product(a, conjugate(a)), tol);
}

double norm(const PeriodicSeq& a) {
  double acc = 0.0;
  for (const Complex& z : a.values()) acc += std::norm(z);
  return std::sqrt(acc / static_cast<double>(a.period()));
}

PeriodicSeq rotate(const PeriodicSeq& a, std::int64_t xi0) {
  std::vector<Complex> v(a.period());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = a.at(static_cast<std::int64_t>(k) + 1 + xi0);
  }
  return PeriodicSeq(std::move(v));
}

PeriodicSeq reduce_period(const PeriodicSeq& a, Tolerance tol) {
  const std::size_t lambda = a.period();
  for (std::size_t d = 1; d < lambda; ++d) {
    if (lambda % d != 0) continue;
    bool ok = true;
    for (std::size_t k = 0; ok && k < lambda; ++k) {
      ok = approx_eq(a[k], a[k % d], tol);
    }
    if (ok) {
      return PeriodicSeq(std::vector<Complex>(a.values().begin(),
                                              a.values().begin() + static_cast<std::ptrdiff_t>(d)));
    }
  }
  return a;
}

Complex sum_over_period(const PeriodicSeq& a) {
  Complex acc(0.0, 0.0);
  for (const Complex& z : a.values()) acc += z;
  return acc;
}

bool approx_eq(Complex a, Complex b, Tolerance tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol.abs_eps + tol.rel_eps * scale;
}

bool approx_eq(const PeriodicSeq& a, const PeriodicSeq& b, Tolerance tol) {
  auto [x, y] = align(a, b);
  for (std::size_t k = 0; k < x.period(); ++k) {
    if (!approx_eq(x[k], y[k], tol)) return false;
  }
  return true;
}

PeriodicSeq dilate(const PeriodicSeq& a, Complex rho) {
  std::vector<Complex> v(a.values());
  for (auto& z : v) z *= rho;
  return PeriodicSeq(std::move(v));
}

PeriodicSeq translate(const PeriodicSeq& a, Complex c) {
  std::vector<Complex> v(a.values());
  for (auto& z : v) z += c;
  return PeriodicSeq(std::move(v));
}

}  // namespace wavenum
