#pragma once

#include "cantor/integer.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cantor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidDigitSet : public Error {
 public:
  using Error::Error;
};

/// Polynomial long division left a nonzero remainder.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(std::string what, std::vector<Integer> remainder)
      : Error(std::move(what)), remainder_(std::move(remainder)) {}
  /// Remainder coefficients, lowest degree first.
  const std::vector<Integer>& remainder() const noexcept { return remainder_; }

 private:
  std::vector<Integer> remainder_;
};

enum class ValidationKind {
  NonPrimeBase,
  ExponentTooSmall,
  EmptyDigitSet,
  NegativeDigit,
  ResidueCollision,
  DigitTooLarge,
  ModulusTooLarge,
};

class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, std::int64_t value, const std::string& what)
      : Error(what), kind_(kind), value_(value) {}
  ValidationKind kind() const noexcept { return kind_; }
  /// The offending input value.
  std::int64_t value() const noexcept { return value_; }

 private:
  ValidationKind kind_;
  std::int64_t value_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSystem : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class MalformedTree : public Error {
 public:
  using Error::Error;
};

class CanonicalizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cantor
