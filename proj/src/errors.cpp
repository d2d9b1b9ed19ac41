#include "qcc/errors.hpp"

namespace qcc {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotPrime:
    return "NotPrime";
  case ErrorKind::NotIrreducible:
    return "NotIrreducible";
  case ErrorKind::DegreeMismatch:
    return "DegreeMismatch";
  case ErrorKind::HOutOfRange:
    return "HOutOfRange";
  case ErrorKind::ZeroElement:
    return "ZeroElement";
  case ErrorKind::FieldTooLarge:
    return "FieldTooLarge";
  case ErrorKind::ContextMismatch:
    return "ContextMismatch";
  case ErrorKind::LengthMismatch:
    return "LengthMismatch";
  case ErrorKind::LambdaHypothesisViolated:
    return "LambdaHypothesisViolated";
  case ErrorKind::NotSemisimple:
    return "NotSemisimple";
  case ErrorKind::NotShiftClosed:
    return "NotShiftClosed";
  case ErrorKind::WrongRegime:
    return "WrongRegime";
  case ErrorKind::TooLargeForExhaustive:
    return "TooLargeForExhaustive";
  case ErrorKind::NotCoprime:
    return "NotCoprime";
  case ErrorKind::DeltaOutOfRange:
    return "DeltaOutOfRange";
  case ErrorKind::EmptySet:
    return "EmptySet";
  case ErrorKind::BadArtifact:
    return "BadArtifact";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

void internal_check(bool cond, const char *what) {
  if (!cond)
    throw std::logic_error(std::string("internal invariant violated: ") + what);
}

} // namespace qcc
