#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilepump/engine/algorithm.hpp"

namespace tilepump {

struct TrousCheck {
    enum class Kind { Vacuous, Confirmed, Violation };
    Kind kind = Kind::Vacuous;
    std::optional<PumpAttempt> first;       // south attempt P_[a,b]
    std::optional<PumpAttempt> second;      // south attempt P_[c,d], b < c
    std::optional<PumpAttempt> confirming;  // north attempt tried between them
    std::string detail;
};

std::string to_string(TrousCheck::Kind k);

// For every pair of south attempts on disjoint segments whose pumpings meet,
// a north attempt must appear between them in the history. Reports the first
// violating pair, otherwise the first confirmed one.
TrousCheck south_pump_monitor(const PathAssembly& p, const std::vector<PumpAttempt>& history, Vector w);

}  // namespace tilepump
