#pragma once

#include <stdexcept>
#include <string>

namespace ivopt {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation produced a non-finite endpoint or value.
struct ArithmeticRangeError : Error {
  using Error::Error;
};

// Text could not be parsed; `position` is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// The model is inconsistent (e.g. lower bound above upper bound).
struct ModelError : Error {
  using Error::Error;
};

// Analytic differentiation hit a point where a bound function is not
// differentiable; callers may fall back to finite differences.
struct KinkError : Error {
  using Error::Error;
};

// A 1-D search found no bracket: the function keeps decreasing.
struct UnboundedError : Error {
  using Error::Error;
};

// A line search could not produce a strict interval decrease.
struct LineSearchError : Error {
  using Error::Error;
};

// Too many samples failed for the check to be meaningful.
struct InconclusiveError : Error {
  using Error::Error;
};

}  // namespace ivopt
