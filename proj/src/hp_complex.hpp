#pragma once

// Internal: ~50-digit complex kernel used by Precision::High evaluation
// paths. Results are always rounded back to double at the boundary.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "wavenum/periodic_seq.hpp"
#include "wavenum/rational.hpp"

namespace wavenum::detail {

using HpReal = boost::multiprecision::cpp_bin_float_50;
using HpComplex = boost::multiprecision::cpp_complex_50;

inline HpReal hp_of(const Rational& r) {
  return HpReal(r.num().str()) / HpReal(r.den().str());
}

inline HpReal hp_pi() { return boost::math::constants::pi<HpReal>(); }

/// e^(2*pi*i*x) for rational x at high precision.
inline HpComplex hp_unit_phase(const Rational& x) {
  const HpReal angle = 2 * hp_pi() * hp_of(x.mod1());
  return HpComplex(cos(angle), sin(angle));
}

inline Complex to_double(const HpComplex& z) {
  return Complex(z.real().convert_to<double>(), z.imag().convert_to<double>());
}

}  // namespace wavenum::detail
