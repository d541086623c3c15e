#ifndef CQNC_ERROR_HPP
#define CQNC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cqnc {

enum class ErrorCode {
    NonPositiveRate,
    MassMissing,
    MissingParameter,
    UnknownPreset,
    InvalidConfig,
    InvalidArgument,
    DivisionSingularity,
    SingularSystem,
    ZeroCoupling,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code), detail_(what)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

    /// Numerical failures (as opposed to bad input).
    bool is_numerical() const noexcept
    {
        // zero coupling means infinite added noise, treated as a singularity
        return code_ == ErrorCode::DivisionSingularity ||
               code_ == ErrorCode::SingularSystem ||
               code_ == ErrorCode::ZeroCoupling;
    }

private:
    ErrorCode code_;
    std::string detail_;
};

inline const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::MassMissing: return "MassMissing";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionSingularity: return "DivisionSingularity";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ZeroCoupling: return "ZeroCoupling";
    }
    return "Unknown";
}

} // namespace cqnc

#endif
