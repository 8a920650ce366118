#include "tilepump/model/errors.hpp"

namespace tilepump {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidVector: return "InvalidVector";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::OutsideWindow: return "OutsideWindow";
    case ErrorCode::InvalidAssembly: return "InvalidAssembly";
    case ErrorCode::UnstableSeed: return "UnstableSeed";
    case ErrorCode::UnknownTile: return "UnknownTile";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::PositionOccupied: return "PositionOccupied";
    case ErrorCode::GrowthError: return "GrowthError";
    case ErrorCode::ZeroPeriod: return "ZeroPeriod";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::SearchBudgetExhausted: return "SearchBudgetExhausted";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::WindowClipError: return "WindowClipError";
    case ErrorCode::CertificateError: return "CertificateError";
    case ErrorCode::UnknownBound: return "UnknownBound";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index)
{
}

Deadline Deadline::after(std::chrono::milliseconds budget)
{
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
}

bool Deadline::expired() const
{
    return at_ && std::chrono::steady_clock::now() > *at_;
}

void Deadline::check() const
{
    if (expired())
        throw Error(ErrorCode::BudgetExceeded, "computation budget exceeded");
}

}  // namespace tilepump
