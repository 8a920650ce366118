#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilepump/engine/algorithm.hpp"
#include "tilepump/engine/monitor.hpp"
#include "tilepump/engine/uturn.hpp"
#include "tilepump/model/fragility.hpp"
#include "tilepump/movies/diet.hpp"

namespace tilepump {

struct ConcludeLimits {
    std::optional<Coord> height_budget;        // default 2|T| + 2
    std::optional<Coord> stake_height_budget;  // default 8|T|
    std::size_t max_steps = 10000;
    std::size_t continuation_steps = 256;
    std::size_t south_attempt_cap = 64;
    std::size_t fragility_max_length = 16;
    FragilityLimits fragility;
    std::optional<DietConfig> diet;  // default margins 2|T| + 2
    bool check_invariants = true;
    Deadline deadline;
};

struct HandReport {
    Side hand = Side::West;
    InitialPair pair;
    Outcome outcome;
    std::vector<StepEvent> trace;
    std::vector<std::string> notes;
    TrousCheck trous;
};

struct FinalReport {
    OutcomeKind outcome = OutcomeKind::Inconclusive;
    std::optional<PumpableCertificate> pumpable;
    std::optional<FragileCertificate> fragile;
    Side hand = Side::West;
    InitialPair pair;
    std::string reason;
    std::vector<StepEvent> trace;
    std::vector<std::string> notes;
    TrousCheck trous;
    Outcome detail;
    std::vector<HandReport> hands;
};

// Runs the pipeline for one handedness.
HandReport analyze_hand(const TileAssemblySystem& tas, const PathAssembly& p, const ConcludeLimits& limits,
                        Side hand);

// Both handednesses, best outcome kept, then the short-path fragility search.
FinalReport conclude(const TileAssemblySystem& tas, const PathAssembly& p, const ConcludeLimits& limits = {});

}  // namespace tilepump
