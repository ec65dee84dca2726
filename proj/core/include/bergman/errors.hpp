#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mathematical-domain violation: alpha out of range, negative index,
/// slant order < 2, dimension < 1, mismatched operand shapes.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input. `position` is a byte offset into the input
/// when known, -1 otherwise.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, long position = -1)
      : Error(msg), position_(position) {}
  long position() const noexcept { return position_; }

private:
  long position_;
};

/// Structurally valid input with invalid content (non-finite
/// coefficients, inconsistent run configuration).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Iterative solver failed to converge within its budget.
class SolverError : public Error {
public:
  explicit SolverError(const std::string& msg) : Error(msg) {}
};

/// Filesystem failure while reading inputs or writing results.
class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace bergman
