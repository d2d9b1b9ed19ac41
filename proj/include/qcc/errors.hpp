#pragma once

#include <stdexcept>
#include <string>

namespace qcc {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  DegreeMismatch,
  HOutOfRange,
  ZeroElement,
  FieldTooLarge,
  ContextMismatch,
  LengthMismatch,
  LambdaHypothesisViolated,
  NotSemisimple,
  NotShiftClosed,
  WrongRegime,
  TooLargeForExhaustive,
  NotCoprime,
  DeltaOutOfRange,
  EmptySet,
  BadArtifact,
};

const char *to_string(ErrorKind kind);

/// Validation failure of a documented precondition.  Carries a machine
/// readable kind so callers (and the CLI) can map it to a diagnostic
/// without parsing the message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what);
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Internal consistency check that stays active in release builds.
/// Violations are bugs, not bad input; throws std::logic_error.
void internal_check(bool cond, const char *what);

} // namespace qcc
