#include "hurwitz/errors.hpp"

namespace hurwitz {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::BackendMismatch: return "BackendMismatch";
        case ErrorCode::GcdUnreliable: return "GcdUnreliable";
        case ErrorCode::RootFindingFailed: return "RootFindingFailed";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::FactorizationFailed: return "FactorizationFailed";
        case ErrorCode::SpectralFailed: return "SpectralFailed";
        case ErrorCode::UseQuasiStabilityRule: return "UseQuasiStabilityRule";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace hurwitz
