#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace monosite {

enum class ErrorKind {
  NonPrime,
  DegreeTooLarge,
  NotFinite,
  RingMismatch,
  ZeroPolynomial,
  CharacteristicZero,
  InternalBound,
  InstanceTooLarge,
  EmptySet,
  ZeroDirection,
  IsMonomial,
  NotRelativelyPrime,
  BothConstant,
  NotMaximal,
  PreconditionViolation,
  OracleBudgetExceeded,
  OracleUnavailable,
  FieldTooSmall,
  SyntaxError,
  UnknownVariable,
  ExponentOverflow,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// True for kinds that report a resource limit rather than bad input.
bool is_limit(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> location = std::nullopt)
      : std::runtime_error(message), kind_(kind), location_(location) {}

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> location() const { return location_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> location_;
};

}  // namespace monosite
