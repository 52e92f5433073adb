#include "cylsolid/error.hpp"

namespace cylsolid {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidScene: return "InvalidScene";
    case ErrorCode::SourceInsideDetector: return "SourceInsideDetector";
    case ErrorCode::AdjacentCap: return "AdjacentCap";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorCode::NonConvergence: return "NonConvergence";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message)
{
}

} // namespace cylsolid
