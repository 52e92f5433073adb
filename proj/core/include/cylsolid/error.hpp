#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cylsolid {

enum class ErrorCode {
    InvalidScene,
    SourceInsideDetector,
    AdjacentCap,
    InvalidArgument,
    DomainError,
    NumericalInconsistency,
    NonConvergence,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix that what() carries.
    const std::string& message() const noexcept { return message_; }

  private:
    ErrorCode code_;
    std::string message_;
};

} // namespace cylsolid
