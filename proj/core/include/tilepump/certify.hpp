#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilepump/model/path.hpp"

namespace tilepump {

inline constexpr int kCertificateVersion = 1;

struct PumpableCertificate {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t verified_horizon = 0;  // iterations replayed
    std::size_t decision_horizon = 0;  // M for seed + P_[1,i-1]

    friend bool operator==(const PumpableCertificate&, const PumpableCertificate&) = default;
};

struct FragileCertificate {
    std::vector<Placement> growth_order;
    Point conflict_point;

    friend bool operator==(const FragileCertificate&, const FragileCertificate&) = default;
};

struct Verdict {
    bool accepted = false;
    std::string reason;
    std::optional<std::size_t> failed_step;  // 1-based replay step

    explicit operator bool() const { return accepted; }
};

// Builds a pumpable certificate whose horizons match what the verifier recomputes.
PumpableCertificate make_pumpable_certificate(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i,
                                              std::size_t j);

// Replays the pumping through verified_horizon iterations with plain
// attachment steps. Malformed certificates (index order or range) throw
// CertificateError; semantic failures are rejected.
Verdict verify_pumpable(const TileAssemblySystem& tas, const PathAssembly& p, const PumpableCertificate& cert);

// Replays growth_order from the seed and checks the tile at conflict_point
// differs from P's tile there.
Verdict verify_fragile(const TileAssemblySystem& tas, const PathAssembly& p, const FragileCertificate& cert);

}  // namespace tilepump
