#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gspline {

enum class ErrorCode {
  RingMismatch,
  InvalidRing,
  UnsupportedRing,
  Overflow,
  NonPrincipalIntersection,
  NotInSum,
  MembershipUndecided,
  InvalidAutomorphism,
  InvalidGraph,
  UnknownVertex,
  SameVertex,
  InvalidPath,
  Disconnected,
  NotAPath,
  NotATree,
  NotACycle,
  NotInIntersection,
  CrtInfeasible,
  NotACutVertex,
  MoreThanTwoSides,
  SidesViolated,
  PastingEquationFails,
  BudgetExceeded,
  InvalidIso,
  MissingValue,
  GraphMismatch,
  Parse,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace gspline
