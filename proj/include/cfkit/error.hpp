#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfkit {

enum class ErrorCode {
  OutOfRange,
  JointBoundViolation,
  InvalidParams,
  DegenerateDenominator,
  EmptyRange,
  OutOfEpsilonRange,
  BadItemCount,
  ItemOutOfRange,
  EmptyFeasibleRegion,
  ParseError,
  UsageError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cfkit
