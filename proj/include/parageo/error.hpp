#pragma once

#include <stdexcept>
#include <string>

namespace parageo {

enum class ErrorCode {
  DivisionByZero,
  DeterminantNotOne,
  DimensionMismatch,
  UnknownCatalogName,
  BadParams,
  AlgebraMismatch,
  NotInAlgebra,
  NotNilpotent,
  NotInParabolic,
  NotInNilpotentPart,
  NotInGroup,
  NotAMember,
  EmptyGrid,
  NotOneGraded,
  BadReparam,
  PoleAtOrigin,
  ZeroVelocity,
  NotApplicableGrading,
  ParseError,
  IoError,
  Usage,
};

const char* to_string(ErrorCode code);

/// All failures raised by the library carry one of the codes above so the
/// CLI can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parageo
