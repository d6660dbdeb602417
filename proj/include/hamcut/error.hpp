#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamcut {

enum class ErrorKind {
  DimensionMismatch,
  DegenerateSpan,
  VerticalLine,
  OrientationNotNormalized,
  InvalidBetaGamma,
  PreconditionFailed,
  OnPredicate,
  OutOfRange,
  NotACube,
  TooLarge,
  NotFound,
  NoCut,
  MultipleCuts,
  NotBijective,
  NoPoint,
  MultiplePoints,
  ContractViolated,
  NoRoot,
  DuplicateLine,
  ConcurrentLines,
  InvalidSequence,
  WrongFamily,
  NotARealization,
  VerificationFailed,
  DegenerateHomography,
  UnknownId,
  MalformedDescription,
  ParseError,
  GenerationBudgetExceeded,
  NotPlottable,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI)
// can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hamcut
