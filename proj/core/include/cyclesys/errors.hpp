#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclesys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (element not in the ground set,
/// malformed vector, set that is not a basis, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a transform does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A time, memory or enumeration budget was exhausted.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, int last_completed_level = -1)
      : Error(what), last_completed_level_(last_completed_level) {}

  /// Highest search level L_k fully built before the budget ran out, or -1.
  int last_completed_level() const noexcept { return last_completed_level_; }

 private:
  int last_completed_level_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A supplied family of cycles fails the cycle-system conditions. When the
/// failure is an independent unique union, `sigma()` is the offending index
/// set as a bit mask (bit i = cycle i, zero-based).
class InvalidSystemError : public Error {
 public:
  InvalidSystemError(const std::string& what, std::uint64_t sigma = 0)
      : Error(what), sigma_(sigma) {}

  std::uint64_t sigma() const noexcept { return sigma_; }

 private:
  std::uint64_t sigma_;
};

}  // namespace cyclesys
