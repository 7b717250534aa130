#include "arfc/errors.hpp"

namespace arfc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionNotRepresentable: return "DivisionNotRepresentable";
    case ErrorCode::NotASeries: return "NotASeries";
    case ErrorCode::EmptyRing: return "EmptyRing";
    case ErrorCode::InfiniteComponent: return "InfiniteComponent";
    case ErrorCode::SelectionFailed: return "SelectionFailed";
    case ErrorCode::InconsistentLocality: return "InconsistentLocality";
    case ErrorCode::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotAMultiplicitySequence: return "NotAMultiplicitySequence";
    case ErrorCode::NoDiscrepancyPossible: return "NoDiscrepancyPossible";
    case ErrorCode::BoundIterationExceeded: return "BoundIterationExceeded";
    case ErrorCode::BoundAssertion: return "BoundAssertion";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WrongVariable: return "WrongVariable";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::WrongVariable:
    case ErrorCode::SchemaError:
    case ErrorCode::EmptyRing:
    case ErrorCode::InfiniteComponent:
    case ErrorCode::NotLocal:
      return true;
    default:
      return false;
  }
}

}  // namespace arfc
