#include "cfkit/error.hpp"

namespace cfkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::JointBoundViolation: return "JointBoundViolation";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::OutOfEpsilonRange: return "OutOfEpsilonRange";
    case ErrorCode::BadItemCount: return "BadItemCount";
    case ErrorCode::ItemOutOfRange: return "ItemOutOfRange";
    case ErrorCode::EmptyFeasibleRegion: return "EmptyFeasibleRegion";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cfkit
