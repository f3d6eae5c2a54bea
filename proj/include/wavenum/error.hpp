#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavenum {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad argument shape/range).
struct ArgumentError : Error {
  using Error::Error;
};

/// A value-level failure: division by a zero element, degenerate product,
/// out-of-range phase index, and similar.
struct DomainError : Error {
  using Error::Error;
};

/// The amplitude recursion hit a vanishing intermediate value; `subset`
/// holds the 1-based indices of the offending term subset.
struct DegenerateSubsetError : DomainError {
  DegenerateSubsetError(const std::string& msg, std::vector<std::size_t> subset_)
      : DomainError(msg), subset(std::move(subset_)) {}
  std::vector<std::size_t> subset;
};

/// Expression syntax error; `offset` is the byte offset into the input and
/// `expected` describes the token set that would have been accepted.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset_, std::string expected_)
      : Error(msg), offset(offset_), expected(std::move(expected_)) {}
  std::size_t offset;
  std::string expected;
};

/// Raised in sieve validation mode when a step disagrees with the oracle.
struct SieveInvariantViolation : Error {
  using Error::Error;
};

}  // namespace wavenum
