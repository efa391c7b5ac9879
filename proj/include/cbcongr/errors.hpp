#pragma once

#include <stdexcept>
#include <string>

namespace cbcongr {

enum class ErrorKind {
  NotInvertible,
  EvenModulus,
  ZeroInput,
  Overflow,
  PrimeMismatch,
  DivisionByZero,
  PrecisionExhausted,
  NegativeValuation,
  InsufficientPrecision,
  DenominatorDivisible,
  BaseDivisible,
  NotDivisible,
  BadParameter,
  NonIntegralSum,
  IndexOutOfDomain,
  UnknownId,
  DomainViolation,
};

const char *to_string(ErrorKind kind);

/// Kernel failures are thrown as Error; the catalog layer converts them into
/// error verdicts so one bad instance never takes down a whole run.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string &msg) {
  throw Error(kind, msg);
}

} // namespace cbcongr
