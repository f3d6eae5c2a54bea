#include <doctest.h>

#include <numbers>
#include <random>

#include "wavenum/integral.hpp"

using namespace wavenum;

namespace {

const Complex kI(0.0, 1.0);
const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("integral partial sums") {
  const auto s = integral(sample(MultWave(Rational(1, 4), Rational(0))));
  REQUIRE(s.period() == 4);
  CHECK(std::abs(s[0] - kI) < 1e-15);
  CHECK(std::abs(s[1] - Complex(-1.0, 1.0)) < 1e-15);
  CHECK(std::abs(s[2] - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(s[3]) < 1e-15);

  for (int n = 2; n <= 64; ++n) {
    const auto in = integral(sample(MultWave(Rational(1, n), Rational(0))));
    CHECK(std::abs(in[in.period() - 1]) < 1e-12);
  }

  const auto c = integral(PeriodicSeq::constant({2.5, -1.0}));
  CHECK(c[0] == Complex(2.5, -1.0));

  // last element equals the phase sum exactly
  std::mt19937 rng(51);
  std::uniform_real_distribution<double> vd(-2.0, 2.0);
  for (int k = 0; k < 20; ++k) {
    std::vector<Complex> v(1 + rng() % 8);
    for (auto& z : v) z = Complex(vd(rng), vd(rng));
    const PeriodicSeq q(v);
    CHECK(integral(q)[q.period() - 1] == sum_over_period(q));
  }
}

TEST_CASE("integral magnitudes match the sine ratio") {
  const auto m4 = integral_magnitudes(MultWave(Rational(1, 4), Rational(0)));
  CHECK(m4[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(m4[3] < 1e-12);

  CHECK(integral_magnitudes(MultWave(Rational(1, 3), Rational(0)))[0] ==
        doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    int m = 1 + static_cast<int>(rng() % (n - 1));
    const Rational f(m, n);
    const auto mags = integral_magnitudes(MultWave(f, Rational(0)));
    const double mm = f.num().convert_to<double>();
    const double nn = f.den().convert_to<double>();
    for (std::size_t k = 1; k <= mags.size(); ++k) {
      const double expect =
          std::abs(std::sin(kPi * mm * static_cast<double>(k) / nn) / std::sin(kPi * mm / nn));
      CHECK(std::abs(mags[k - 1] - expect) < 1e-9);
    }
  }

  CHECK_THROWS_AS(integral_magnitudes(MultWave(Rational(0), Rational(0))), ArgumentError);
}

TEST_CASE("n-gon iteration") {
  // n = 6: the norm is invariant
  const auto t6 = iterate_ngon(6, 8);
  for (const auto& tr : t6) CHECK(tr.vertex_norm == doctest::Approx(1.0).epsilon(1e-12));

  // n = 4: r_1 = 1/sqrt(2)
  const auto t4 = iterate_ngon(4, 2);
  CHECK(t4[1].vertex_norm == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  // monotonicity: decreasing for n < 6, increasing for n > 6
  const auto t3 = iterate_ngon(3, 5);
  const auto t8 = iterate_ngon(8, 5);
  for (std::size_t t = 2; t < t3.size(); ++t) CHECK(t3[t].vertex_norm < t3[t - 1].vertex_norm);
  for (std::size_t t = 2; t < t8.size(); ++t) CHECK(t8[t].vertex_norm > t8[t - 1].vertex_norm);

  for (std::uint32_t n = 3; n <= 12; ++n) {
    const auto traces = iterate_ngon(n, 8);
    const double s = 2.0 * std::sin(kPi / static_cast<double>(n));
    for (std::size_t t = 1; t < traces.size(); ++t) {
      CHECK(std::abs(traces[t].vertex_norm * s - traces[t - 1].vertex_norm) < 1e-9);
      CHECK(traces[t].edge_norm == traces[t - 1].vertex_norm);
      // regular polygon: every edge has length edge_norm
      const auto& v = traces[t].vertices;
      for (std::size_t k = 0; k < v.period(); ++k) {
        const Complex e = v.at(static_cast<std::int64_t>(k) + 2) -
                          v.at(static_cast<std::int64_t>(k) + 1);
        CHECK(std::abs(std::abs(e) - traces[t].edge_norm) < 1e-9);
      }
    }
    // iteration 0 vertices include the origin
    bool has_origin = false;
    for (const auto& z : traces[0].vertices.values()) {
      if (std::abs(z) < 1e-12) has_origin = true;
    }
    CHECK(has_origin);
  }

  CHECK_THROWS_AS(iterate_ngon(2, 1), ArgumentError);
}

TEST_CASE("zero-sum predicate") {
  CHECK(is_zero_sum(sample(MultWave(Rational(1, 5), Rational(0)))));
  CHECK(!is_zero_sum(PeriodicSeq::constant({1.0, 0.0})));

  // products and sums of zero-sum sequences stay zero-sum
  std::mt19937 rng(53);
  for (int k = 0; k < 20; ++k) {
    const int n1 = 2 + static_cast<int>(rng() % 8);
    const int n2 = 2 + static_cast<int>(rng() % 8);
    const auto a = sample(MultWave(Rational(1, n1), Rational(0)));
    const auto b = sample(MultWave(Rational(1, n2), Rational(0)));
    CHECK(is_zero_sum(ew_product(a, b), Tolerance{1e-9, 1e-9}));
    CHECK(is_zero_sum(ew_sum(a, b), Tolerance{1e-9, 1e-9}));
  }
}

TEST_CASE("co and re basis windows") {
  const auto re3 = re_basis_window(3, 1, 6);
  const std::vector<double> expect_re = {0, 0, 1, 0, 0, 1};
  for (std::int64_t xi = 1; xi <= 6; ++xi) {
    CHECK(re3.at(xi) == Complex(expect_re[static_cast<std::size_t>(xi - 1)], 0.0));
  }

  const auto co3 = co_basis_window(3, 1, 6);
  for (std::int64_t xi = 1; xi <= 6; ++xi) {
    CHECK(co3.at(xi) == Complex(1.0 - expect_re[static_cast<std::size_t>(xi - 1)], 0.0));
  }

  const auto ones = window_sum(co_basis_window(4, -9, 9), re_basis_window(4, -9, 9));
  for (const auto& z : ones.values) CHECK(z == Complex(1.0, 0.0));
}

TEST_CASE("particulate unit is the +/-n indicator") {
  const auto p2 = particulate_unit(2, 7);
  for (std::int64_t xi = -7; xi <= 7; ++xi) {
    const Complex expect = (xi == 2 || xi == -2) ? Complex(1, 0) : Complex(0, 0);
    CHECK(p2.at(xi) == expect);
  }
  CHECK(p2.at(0) == Complex(0.0, 0.0));

  const auto p5 = particulate_unit(5, 12);
  CHECK(p5.at(5) == Complex(1.0, 0.0));
  CHECK(p5.at(-5) == Complex(1.0, 0.0));
  CHECK(p5.at(10) == Complex(0.0, 0.0));
  CHECK(p5.at(-10) == Complex(0.0, 0.0));

  // symmetric with exactly two nonzero entries
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto p = particulate_unit(n, n + 9);
    std::size_t nonzero = 0;
    for (std::int64_t xi = p.lo; xi <= p.hi; ++xi) {
      CHECK(p.at(xi) == p.at(-xi));
      if (p.at(xi) != Complex(0.0, 0.0)) ++nonzero;
    }
    CHECK(nonzero == 2);
  }

  CHECK_THROWS_AS(particulate_unit(4, 4), ArgumentError);
}

TEST_CASE("particulate scaling and one-sided masks") {
  const auto p34 = particulate_scale(3, 4, 10);
  CHECK(p34.at(3) == Complex(4.0, 0.0));
  CHECK(p34.at(-3) == Complex(4.0, 0.0));
  CHECK(p34.at(6) == Complex(0.0, 0.0));

  const auto p1 = particulate_scale(5, 1, 8);
  const auto u = particulate_unit(5, 8);
  CHECK(p1.values == u.values);

  const auto plus = particulate_one_sided(3, Complex(2.5, 0.0), 9, true);
  CHECK(plus.at(3) == Complex(2.5, 0.0));
  CHECK(plus.at(-3) == Complex(0.0, 0.0));
  const auto minus = particulate_one_sided(3, Complex(2.5, 0.0), 9, false);
  CHECK(minus.at(-3) == Complex(2.5, 0.0));
  CHECK(minus.at(3) == Complex(0.0, 0.0));
}

TEST_CASE("windowed sequence plumbing") {
  CHECK_THROWS_AS(WindowedSeq(3, 2), ArgumentError);
  WindowedSeq w(-1, 1);
  CHECK(w.size() == 3);
  CHECK_THROWS_AS(w.at(2), DomainError);
  CHECK_THROWS_AS(window_sum(WindowedSeq(0, 1), WindowedSeq(0, 2)), ArgumentError);
}
