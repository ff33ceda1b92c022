#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitkit {

enum class ErrorCode {
  DimensionMismatch,
  SingularMatrix,
  InconsistentSystem,
  EigenvaluesNotDistinct,
  NotDiagonalizable,
  OutOfRange,
  ParityMismatch,
  GroupMismatch,
  ScalarKindMismatch,
  InvalidGroupTable,
  NotAHomomorphism,
  LinearlyDependentOrbit,
  DegenerateContraction,
  InconsistentScale,
  VerificationFailed,
  DegenerateSample,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's JSON "status" field) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbitkit
