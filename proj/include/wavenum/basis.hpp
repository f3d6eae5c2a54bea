#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "wavenum/multiplicative.hpp"
#include "wavenum/periodic_seq.hpp"

namespace wavenum {

/// n period-n sequences; element j is the phase-j indicator scaled by n
/// (orthogonal) or 1 (orthonormal).
struct BasisSet {
  std::uint32_t n = 0;
  std::vector<PeriodicSeq> elements;
};

/// Samples of w(1/n,0) (-) w(0,j/n): element at xi is
/// e^(2*pi*i*xi/n) - e^(2*pi*i*j/n), zero on the diagonal xi = j.
PeriodicSeq translated_wave(std::uint32_t n, std::uint32_t j);

/// The orthogonal basis u(1/n,j) with principal sequence (0,..,n,..,0).
/// This is the exact indicator form; the constructive route below is the
/// numeric validation path.
BasisSet orthogonal_basis(std::uint32_t n);

/// Builds u(1/n,j) from the leave-one-out products of translated waves
/// times the samples of w(1/n,0), validating the diagonal identity
/// t(xi) = n*e^(-2*pi*i*xi/n) along the way. Precision defaults to High
/// for n > 16.
BasisSet orthogonal_basis_constructive(std::uint32_t n,
                                       std::optional<Precision> prec = std::nullopt);

/// e(1/n,j) = (1/n) u(1/n,j): the phase-j indicator. n = 1 gives {(1)}.
BasisSet orthonormal_basis(std::uint32_t n);

/// s with every phase outside `keep` (1-based indices) zeroed.
PeriodicSeq project_phases(const PeriodicSeq& s, const std::set<std::uint32_t>& keep);

/// Phases 1..n-1 of the sample of w (the period-n phase zeroed).
PeriodicSeq co_number(const MultWave& w);
/// The complementary single-phase mask (only phase n kept).
PeriodicSeq re_number(const MultWave& w);

/// Product of sin(pi*m/n) over m = 1..n-1; equals n / 2^(n-1).
double sin_product(std::uint32_t n);

}  // namespace wavenum
