#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

enum class ErrorCode {
    DegreeTooSmall,
    PreconditionFailed,
    BackendMismatch,
    GcdUnreliable,
    RootFindingFailed,
    CapExceeded,
    FactorizationFailed,
    SpectralFailed,
    UseQuasiStabilityRule,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Base class for every error raised by the library. Carries a stable
/// machine-readable code next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace hurwitz
