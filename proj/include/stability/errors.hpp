#pragma once

#include <stdexcept>
#include <string>

namespace stability {

/// Error taxonomy shared by every module. Callers that implement
/// skip-and-count semantics (defect sampling, orbit checks) catch by code.
enum class Errc {
    InvalidParameter,
    ParseError,
    ConfigError,
    DomainError,            // evaluation point outside the function's domain
    DegenerateDenominator,  // the equation itself is undefined at (x, y)
    ZeroToNegativePower,
    MuUndefined,
    AlreadyPerturbed,
    LimitMissing,
    IoError,
};

/// Secondary reason for MuUndefined; sequence evaluators treat the
/// negative-power pole as a divergent (+infinity) term, a missing table
/// key as a hard error.
enum class MuUndefinedReason {
    None,
    NegativePowerAtZero,
    MissingTableKey,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, MuUndefinedReason reason = MuUndefinedReason::None)
        : std::runtime_error(std::move(message)), code_(code), reason_(reason) {}

    Errc code() const noexcept { return code_; }
    MuUndefinedReason mu_reason() const noexcept { return reason_; }

private:
    Errc code_;
    MuUndefinedReason reason_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::ParseError: return "ParseError";
        case Errc::ConfigError: return "ConfigError";
        case Errc::DomainError: return "DomainError";
        case Errc::DegenerateDenominator: return "DegenerateDenominator";
        case Errc::ZeroToNegativePower: return "ZeroToNegativePower";
        case Errc::MuUndefined: return "MuUndefined";
        case Errc::AlreadyPerturbed: return "AlreadyPerturbed";
        case Errc::LimitMissing: return "LimitMissing";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

[[noreturn]] inline void raise(Errc code, const std::string& message,
                               MuUndefinedReason reason = MuUndefinedReason::None) {
    throw Error(code, std::string(errc_name(code)) + ": " + message, reason);
}

}  // namespace stability
