#include "wavenum/equations.hpp"

#include <cmath>

namespace wavenum {

namespace {

constexpr Complex kI(0.0, 1.0);

PeriodicSeq direct_sum(std::span<const ScaledWave> terms) {
  PeriodicSeq acc = ew_product(terms[0].coeff, sample(terms[0].wave));
  for (std::size_t j = 1; j < terms.size(); ++j) {
    acc = ew_sum(acc, ew_product(terms[j].coeff, sample(terms[j].wave)));
  }
  return acc;
}

std::vector<PeriodicSeq> align_four(const PeriodicSeq& a, const PeriodicSeq& b,
                                    const PeriodicSeq& c, const PeriodicSeq& d) {
  const auto lambda =
      combined_period({Int(a.period()), Int(b.period()), Int(c.period()), Int(d.period())})
          .convert_to<std::size_t>();
  auto extend = [lambda](const PeriodicSeq& s) {
    std::vector<Complex> v(lambda);
    for (std::size_t k = 0; k < lambda; ++k) v[k] = s[k % s.period()];
    return PeriodicSeq(std::move(v));
  };
  return {extend(a), extend(b), extend(c), extend(d)};
}

}  // namespace

double residual(std::span<const ScaledWave> terms) {
  if (terms.empty()) throw ArgumentError("residual: empty term list");
  return norm(direct_sum(terms));
}

MultWave TwoTermSolution::member(long long k, long long l) const {
  return MultWave(f2 + df + Rational(k), g2 + dg + Rational(l));
}

TwoTermSolution solve_two_term(const Rational& f2, const Rational& g2) {
  return TwoTermSolution{f2, g2, Rational(0), Rational(1, 2)};
}

FactoredConditions factored_conditions(std::span<const ScaledWave> terms, Tolerance tol) {
  const std::size_t n = terms.size();
  if (n < 3 || n > 8) {
    throw ArgumentError("factored_conditions: need 3 <= N <= 8 terms");
  }
  const std::vector<LogPhase> logs = log_phases(terms, tol);
  const std::size_t lambda = logs[0].value.period();
  const double k = static_cast<double>(n - 1);

  FactoredConditions out;
  out.factors.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<LogPhase> sub;
    std::vector<std::size_t> sub_indices;
    sub.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != m) {
        sub.push_back(logs[j]);
        sub_indices.push_back(j + 1);
      }
    }
    const PeriodicSeq a_sub = amplitude_recursive(sub, tol);
    for (std::size_t xi = 0; xi < lambda; ++xi) {
      if (std::abs(a_sub[xi]) <= tol.abs_eps) {
        throw DegenerateSubsetError(
            "factored_conditions: degenerate leave-one-out amplitude on term subset at m=" +
                std::to_string(m + 1) + ", phase index xi=" + std::to_string(xi + 1),
            sub_indices);
      }
    }

    std::vector<Complex> factor(lambda);
    bool vanishes = true;
    for (std::size_t xi = 0; xi < lambda; ++xi) {
      Complex theta(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != m) theta += logs[j].value[xi];
      }
      theta = (theta - k * logs[m].value[xi]) / k;
      const Complex log_a = std::log(a_sub[xi]);
      factor[xi] = 2.0 * std::exp(0.5 * log_a) * std::cos(0.5 * theta - kI * (0.5 * log_a));
      if (std::abs(factor[xi]) > tol.abs_eps) vanishes = false;
    }
    if (vanishes) out.vanishing.push_back(m + 1);
    out.factors.emplace_back(std::move(factor));
  }
  return out;
}

QuadraticRoots mobius_fixed_points(const PeriodicSeq& A, const PeriodicSeq& B,
                                   const PeriodicSeq& C, const PeriodicSeq& D, Tolerance tol) {
  const auto seqs = align_four(A, B, C, D);
  const auto& a = seqs[0];
  const auto& b = seqs[1];
  const auto& c = seqs[2];
  const auto& d = seqs[3];
  const std::size_t lambda = a.period();

  std::vector<Complex> plus(lambda), minus(lambda);
  double max_disc = 0.0;
  for (std::size_t k = 0; k < lambda; ++k) {
    if (std::abs(c[k]) <= tol.abs_eps) {
      throw DomainError("mobius_fixed_points: zero element in C at phase index xi=" +
                        std::to_string(k + 1));
    }
    const Complex lin = d[k] - a[k];
    const Complex disc = lin * lin + 4.0 * b[k] * c[k];
    const Complex s = std::sqrt(disc);
    plus[k] = (-lin + s) / (2.0 * c[k]);
    minus[k] = (-lin - s) / (2.0 * c[k]);
    max_disc = std::max(max_disc, std::abs(disc));
  }

  QuadraticRoots out{PeriodicSeq(std::move(plus)), PeriodicSeq(std::move(minus)), 0.0, 0.0,
                     max_disc <= tol.abs_eps};
  auto plug_back = [&](const PeriodicSeq& w) {
    return norm(ew_difference(ew_sum(ew_product(c, ew_product(w, w)), ew_product(d - a, w)), b));
  };
  out.residual_plus = plug_back(out.plus);
  out.residual_minus = plug_back(out.minus);
  return out;
}

}  // namespace wavenum
