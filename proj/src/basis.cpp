#include "wavenum/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hp_complex.hpp"

namespace wavenum {

namespace {

void check_n(std::uint32_t n, std::uint32_t lo, const char* who) {
  if (n < lo) {
    throw ArgumentError(std::string(who) + ": n must be >= " + std::to_string(lo));
  }
}

template <typename C>
C phase_of(const Rational& x);

template <>
Complex phase_of<Complex>(const Rational& x) {
  return unit_phase(x);
}

template <>
detail::HpComplex phase_of<detail::HpComplex>(const Rational& x) {
  return detail::hp_unit_phase(x);
}

template <typename C>
double abs_of(const C& z) {
  if constexpr (std::is_same_v<C, Complex>) {
    return std::abs(z);
  } else {
    return abs(z).template convert_to<double>();
  }
}

template <typename C>
Complex round_to_double(const C& z) {
  if constexpr (std::is_same_v<C, Complex>) {
    return z;
  } else {
    return detail::to_double(z);
  }
}

// The leave-one-out product construction at a chosen numeric precision.
template <typename C>
BasisSet construct_basis(std::uint32_t n) {
  // Translated waves w_nk, element (xi,k): e^(2pi i xi/n) - e^(2pi i k/n).
  std::vector<std::vector<C>> tw(n, std::vector<C>(n));
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (std::uint32_t xi = 1; xi <= n; ++xi) {
      tw[k - 1][xi - 1] = phase_of<C>(Rational(Int(xi), Int(n))) -
                          phase_of<C>(Rational(Int(k), Int(n)));
    }
  }

  BasisSet out;
  out.n = n;
  out.elements.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    std::vector<C> prod(n, C(1.0));
    for (std::uint32_t k = 1; k <= n; ++k) {
      if (k == j) continue;
      for (std::uint32_t xi = 0; xi < n; ++xi) prod[xi] *= tw[k - 1][xi];
    }
    // Diagonal identity t(j) = n * e^(-2pi i j/n).
    const C expected = static_cast<double>(n) * phase_of<C>(-Rational(Int(j), Int(n)));
    if (abs_of<C>(prod[j - 1] - expected) > 1e-6 * static_cast<double>(n)) {
      throw DomainError("orthogonal basis construction: diagonal identity failed at j=" +
                        std::to_string(j));
    }
    std::vector<Complex> values(n);
    for (std::uint32_t xi = 1; xi <= n; ++xi) {
      values[xi - 1] = round_to_double<C>(prod[xi - 1] * phase_of<C>(Rational(Int(xi), Int(n))));
    }
    out.elements.emplace_back(std::move(values));
  }
  return out;
}

}  // namespace

PeriodicSeq translated_wave(std::uint32_t n, std::uint32_t j) {
  check_n(n, 2, "translated_wave");
  if (j < 1 || j > n) {
    throw ArgumentError("translated_wave: j must be in 1..n");
  }
  std::vector<Complex> v(n);
  for (std::uint32_t xi = 1; xi <= n; ++xi) {
    v[xi - 1] = unit_phase(Rational(Int(xi), Int(n))) - unit_phase(Rational(Int(j), Int(n)));
  }
  return PeriodicSeq(std::move(v));
}

BasisSet orthogonal_basis(std::uint32_t n) {
  check_n(n, 2, "orthogonal_basis");
  BasisSet out;
  out.n = n;
  out.elements.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    std::vector<Complex> v(n, Complex(0.0, 0.0));
    v[j - 1] = Complex(static_cast<double>(n), 0.0);
    out.elements.emplace_back(std::move(v));
  }
  return out;
}

BasisSet orthogonal_basis_constructive(std::uint32_t n, std::optional<Precision> prec) {
  check_n(n, 2, "orthogonal_basis_constructive");
  const Precision p = prec.value_or(n > 16 ? Precision::High : Precision::Double);
  return p == Precision::High ? construct_basis<detail::HpComplex>(n)
                              : construct_basis<Complex>(n);
}

BasisSet orthonormal_basis(std::uint32_t n) {
  check_n(n, 1, "orthonormal_basis");
  BasisSet out;
  out.n = n;
  out.elements.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    std::vector<Complex> v(n, Complex(0.0, 0.0));
    v[j - 1] = Complex(1.0, 0.0);
    out.elements.emplace_back(std::move(v));
  }
  return out;
}

PeriodicSeq project_phases(const PeriodicSeq& s, const std::set<std::uint32_t>& keep) {
  for (std::uint32_t j : keep) {
    if (j < 1 || j > s.period()) {
      throw ArgumentError("project_phases: keep index " + std::to_string(j) + " outside 1.." +
                          std::to_string(s.period()));
    }
  }
  std::vector<Complex> v(s.period(), Complex(0.0, 0.0));
  for (std::uint32_t j : keep) v[j - 1] = s[j - 1];
  return PeriodicSeq(std::move(v));
}

PeriodicSeq co_number(const MultWave& w) {
  const PeriodicSeq s = sample(w);
  std::set<std::uint32_t> keep;
  for (std::uint32_t j = 1; j + 1 <= s.period(); ++j) keep.insert(j);
  return project_phases(s, keep);
}

PeriodicSeq re_number(const MultWave& w) {
  const PeriodicSeq s = sample(w);
  return project_phases(s, {static_cast<std::uint32_t>(s.period())});
}

double sin_product(std::uint32_t n) {
  check_n(n, 2, "sin_product");
  double p = 1.0;
  for (std::uint32_t m = 1; m < n; ++m) {
    p *= std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  }
  return p;
}

}  // namespace wavenum
