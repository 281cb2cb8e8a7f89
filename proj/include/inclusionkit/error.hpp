#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace inclusionkit {

enum class ErrorCode {
    ContainmentViolation,
    AmbientMismatch,
    DimensionMismatch,
    ZeroVector,
    NotInSlice,
    InvalidInput,
    NotInterior,
    BudgetExceeded,
    Unbounded,
    Malformed,
};

std::string_view error_name(ErrorCode code);

/// Exception carrying one of the contract error codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotInSlice: return "NotInSlice";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Malformed: return "Malformed";
    }
    return "Unknown";
}

} // namespace inclusionkit
