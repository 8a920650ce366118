#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tilepump {

enum class ErrorCode {
    InvalidVector,
    InvalidCut,
    OutsideWindow,
    InvalidAssembly,
    UnstableSeed,
    UnknownTile,
    InvalidPath,
    InvalidIndex,
    PositionOccupied,
    GrowthError,
    ZeroPeriod,
    TypeMismatch,
    SearchBudgetExhausted,
    PreconditionFailed,
    InvariantViolation,
    WindowClipError,
    CertificateError,
    UnknownBound,
    BoundTooLarge,
    BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

// `index` carries a 1-based step or path index when the failure has one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

// Wall-clock budget shared by long searches. A default Deadline never expires.
class Deadline {
public:
    Deadline() = default;
    static Deadline after(std::chrono::milliseconds budget);

    bool expired() const;
    void check() const;

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace tilepump
