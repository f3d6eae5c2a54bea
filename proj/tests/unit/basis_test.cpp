#include <doctest.h>

#include <numbers>
#include <random>

#include "wavenum/basis.hpp"

using namespace wavenum;

namespace {

const Complex kI(0.0, 1.0);
const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("translated_wave") {
  const auto t22 = translated_wave(2, 2);
  REQUIRE(t22.period() == 2);
  CHECK(t22[0] == Complex(-2.0, 0.0));
  CHECK(t22[1] == Complex(0.0, 0.0));

  CHECK(translated_wave(4, 1)[0] == Complex(0.0, 0.0));

  // two-term polar identity: 2i sin(pi (xi - j)/n) e^{i pi (xi + j)/n}
  for (std::uint32_t n : {3u, 5u, 8u}) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const auto t = translated_wave(n, j);
      for (std::uint32_t xi = 1; xi <= n; ++xi) {
        const double dn = static_cast<double>(n);
        const Complex expect = 2.0 * kI * std::sin(kPi * (xi - static_cast<double>(j)) / dn) *
                               std::exp(kI * (kPi * (xi + static_cast<double>(j)) / dn));
        CHECK(std::abs(t[xi - 1] - expect) < 1e-12);
      }
    }
  }

  CHECK_THROWS_AS(translated_wave(4, 0), ArgumentError);
  CHECK_THROWS_AS(translated_wave(4, 5), ArgumentError);
  CHECK_THROWS_AS(translated_wave(1, 1), ArgumentError);
}

TEST_CASE("constructive orthogonal basis matches the indicator form") {
  const auto b2 = orthogonal_basis_constructive(2);
  REQUIRE(b2.elements.size() == 2);
  CHECK(std::abs(b2.elements[0][0] - Complex(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(b2.elements[0][1]) < 1e-14);
  CHECK(std::abs(b2.elements[1][1] - Complex(2.0, 0.0)) < 1e-14);

  const auto b4 = orthogonal_basis_constructive(4);
  CHECK(std::abs(b4.elements[2][2] - Complex(4.0, 0.0)) < 1e-13);
  for (std::size_t k : {0u, 1u, 3u}) CHECK(std::abs(b4.elements[2][k]) < 1e-13);

  for (std::uint32_t n = 2; n <= 12; ++n) {
    const auto c = orthogonal_basis_constructive(n);
    const auto exact = orthogonal_basis(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t xi = 0; xi < n; ++xi) {
        CHECK(std::abs(c.elements[j][xi] - exact.elements[j][xi]) < 1e-7);
      }
    }
  }

  // high-precision route kicks in above n = 16
  const auto c20 = orthogonal_basis_constructive(20);
  const auto e20 = orthogonal_basis(20);
  for (std::uint32_t j = 0; j < 20; ++j) {
    for (std::uint32_t xi = 0; xi < 20; ++xi) {
      CHECK(std::abs(c20.elements[j][xi] - e20.elements[j][xi]) < 1e-7);
    }
  }
}

TEST_CASE("sin product identity") {
  CHECK(sin_product(6) == doctest::Approx(6.0 / 32.0).epsilon(1e-12));
  for (std::uint32_t n = 2; n <= 32; ++n) {
    const double expect = static_cast<double>(n) / std::pow(2.0, static_cast<double>(n - 1));
    CHECK(std::abs(sin_product(n) - expect) < 1e-9);
  }
}

TEST_CASE("orthonormal basis") {
  const auto b3 = orthonormal_basis(3);
  CHECK(b3.elements[1][1] == Complex(1.0, 0.0));
  CHECK(b3.elements[1][0] == Complex(0.0, 0.0));
  CHECK(b3.elements[1][2] == Complex(0.0, 0.0));

  const auto b1 = orthonormal_basis(1);
  REQUIRE(b1.elements.size() == 1);
  CHECK(b1.elements[0][0] == Complex(1.0, 0.0));
}

TEST_CASE("orthogonality and completeness") {
  for (std::uint32_t n : {2u, 5u, 12u, 32u}) {
    const auto u = orthogonal_basis(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto prod = ew_product(u.elements[i], u.elements[j]);
        for (const auto& z : prod.values()) CHECK(z == Complex(0.0, 0.0));
      }
    }
  }

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> vd(-2.0, 2.0);
  for (std::uint32_t n : {2u, 3u, 8u}) {
    std::vector<Complex> v(n);
    for (auto& z : v) z = Complex(vd(rng), vd(rng));
    const PeriodicSeq s(v);
    const auto e = orthonormal_basis(n);
    PeriodicSeq acc = ew_product(e.elements[0], s);
    for (std::uint32_t j = 1; j < n; ++j) acc = ew_sum(acc, ew_product(e.elements[j], s));
    CHECK(approx_eq(acc, s, Tolerance{1e-12, 1e-12}));
  }
}

TEST_CASE("project_phases") {
  const PeriodicSeq s({{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  const auto all = project_phases(s, {1, 2, 3, 4});
  CHECK(all.values() == s.values());

  const auto none = project_phases(s, {});
  for (const auto& z : none.values()) CHECK(z == Complex(0.0, 0.0));

  const auto some = project_phases(s, {1, 3});
  CHECK(some[0] == Complex(1, 0));
  CHECK(some[1] == Complex(0, 0));
  CHECK(some[2] == Complex(3, 0));
  CHECK(some[3] == Complex(0, 0));

  CHECK_THROWS_AS(project_phases(s, {5}), ArgumentError);
}

TEST_CASE("co and re numbers partition the sample") {
  const MultWave h(Rational(1, 2), Rational(0));
  const auto co = co_number(h);
  CHECK(co[0] == Complex(-1.0, 0.0));
  CHECK(co[1] == Complex(0.0, 0.0));
  const auto re = re_number(h);
  CHECK(re[0] == Complex(0.0, 0.0));
  CHECK(re[1] == Complex(1.0, 0.0));

  std::mt19937 rng(42);
  int done = 0;
  while (done < 20) {
    std::uniform_int_distribution<int> dd(2, 12);
    const int n = dd(rng);
    std::uniform_int_distribution<int> nd(1, n - 1);
    const MultWave w(Rational(nd(rng), n), Rational(nd(rng), n));
    if (!is_simple(w)) continue;
    ++done;
    const auto c = co_number(w);
    const auto r = re_number(w);
    CHECK(approx_eq(ew_sum(c, r), sample(w), Tolerance{1e-14, 1e-14}));
    for (const auto& z : ew_product(c, r).values()) CHECK(z == Complex(0.0, 0.0));
  }
}

TEST_CASE("co/re of basis elements are binary partitions of one") {
  for (std::uint32_t n : {1u, 3u, 7u}) {
    const auto e = orthonormal_basis(n);
    // *e = sum of the first n-1 elements, oe = the n-th element
    PeriodicSeq co = PeriodicSeq::zeros(n);
    for (std::uint32_t j = 0; j + 1 < n; ++j) co = ew_sum(co, e.elements[j]);
    const PeriodicSeq& re = e.elements[n - 1];
    const auto sum = ew_sum(co, re);
    for (const auto& z : sum.values()) CHECK(z == Complex(1.0, 0.0));
    for (const auto& z : ew_product(co, re).values()) CHECK(z == Complex(0.0, 0.0));
  }
}
