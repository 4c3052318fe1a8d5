#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghw {

/// Malformed user input: set grammar, field parameters, dimensions.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Precondition violated by a caller (range, dimension mismatch, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

class FieldMismatch : public std::invalid_argument {
public:
  FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

/// An enumeration would exceed the configured cap, or an exact value
/// does not fit the integer range used to hold it.
class ResourceLimit : public std::runtime_error {
public:
  ResourceLimit(const std::string& what, std::string required)
      : std::runtime_error(what), required_(std::move(required)) {}

  /// Decimal rendering of the count the operation would have needed.
  const std::string& required() const noexcept { return required_; }

private:
  std::string required_;
};

/// No closed form covers the given complex. The message names the
/// hypothesis that failed.
class NotApplicable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two evaluations that must agree did not (overlapping table rows,
/// matching tables under different labelings).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace ghw
