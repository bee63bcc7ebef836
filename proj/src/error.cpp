#include "gspline/error.hpp"

namespace gspline {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonPrincipalIntersection: return "NonPrincipalIntersection";
    case ErrorCode::NotInSum: return "NotInSum";
    case ErrorCode::MembershipUndecided: return "MembershipUndecided";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotInIntersection: return "NotInIntersection";
    case ErrorCode::CrtInfeasible: return "CrtInfeasible";
    case ErrorCode::NotACutVertex: return "NotACutVertex";
    case ErrorCode::MoreThanTwoSides: return "MoreThanTwoSides";
    case ErrorCode::SidesViolated: return "SidesViolated";
    case ErrorCode::PastingEquationFails: return "PastingEquationFails";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidIso: return "InvalidIso";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gspline
