#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arfc {

enum class ErrorCode {
  // algebra
  DivisionNotRepresentable,
  NotASeries,
  // curve
  EmptyRing,
  InfiniteComponent,
  SelectionFailed,
  // locality
  InconsistentLocality,
  // lipman
  MaxStepsExceeded,
  // tree
  NotLocal,
  // bounds
  NotAMultiplicitySequence,
  NoDiscrepancyPossible,
  BoundIterationExceeded,
  BoundAssertion,
  // cli_io
  ParseError,
  WrongVariable,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Input errors are problems with the user's curve file; everything else is a
/// failure of the computation itself.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error with a pipeline stage label in front of the detail.
  Error in_stage(const std::string& stage) const { return Error(code_, "[" + stage + "] " + detail_); }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace arfc
