#pragma once

#include <stdexcept>
#include <string>

namespace acgd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths disagree with each other or with a region/objective.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// NaN from an objective, or an iterative kernel that failed to converge.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Invalid or inconsistent configuration (missing constants, bad parameters).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Requested (region, norm) combination is not supported.
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// The search direction is zero, so no step size is defined.
class DegenerateDirectionError : public Error {
public:
  using Error::Error;
};

/// Backtracking exceeded its round cap; usually a value/gradient mismatch.
class BacktrackLimitError : public Error {
public:
  using Error::Error;
};

/// Constrained solve started outside the feasible region.
class InfeasibleStartError : public Error {
public:
  using Error::Error;
};

/// Well-formed input with unacceptable content (e.g. a label that is not +-1).
class DataError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace acgd
