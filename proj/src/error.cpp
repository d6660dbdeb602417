#include "hamcut/error.hpp"

namespace hamcut {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::VerticalLine: return "VerticalLine";
    case ErrorKind::OrientationNotNormalized: return "OrientationNotNormalized";
    case ErrorKind::InvalidBetaGamma: return "InvalidBetaGamma";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::OnPredicate: return "OnPredicate";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotACube: return "NotACube";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NoCut: return "NoCut";
    case ErrorKind::MultipleCuts: return "MultipleCuts";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NoPoint: return "NoPoint";
    case ErrorKind::MultiplePoints: return "MultiplePoints";
    case ErrorKind::ContractViolated: return "ContractViolated";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::DuplicateLine: return "DuplicateLine";
    case ErrorKind::ConcurrentLines: return "ConcurrentLines";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::NotARealization: return "NotARealization";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::DegenerateHomography: return "DegenerateHomography";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::MalformedDescription: return "MalformedDescription";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
    case ErrorKind::NotPlottable: return "NotPlottable";
  }
  return "Unknown";
}

}  // namespace hamcut
