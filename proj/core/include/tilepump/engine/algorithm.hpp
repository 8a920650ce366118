#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilepump/certify.hpp"
#include "tilepump/model/errors.hpp"
#include "tilepump/model/path.hpp"
#include "tilepump/visibility.hpp"

namespace tilepump {

enum class Mode { Forward, Backward };
enum class Provenance { FromP, FromPTranslated };

// One tile of the stake path, in forward coordinates. FromP(n) sits at
// pos(P_n) with type(P_n); FromPTranslated(n) at pos(P_n) + w where
// w = pos(P_j) - pos(P_i).
struct StakeTile {
    Point pos;
    TileId tile = 0;
    Provenance provenance = Provenance::FromP;
    std::size_t index = 0;

    friend bool operator==(const StakeTile&, const StakeTile&) = default;
};

enum class PumpDirection { North, South };  // along +w or -w
enum class AttemptResult { Conflict, Infinite, BreaksP };

struct PumpAttempt {
    std::size_t step = 0;
    std::size_t u = 0;
    std::size_t v = 0;
    PumpDirection direction = PumpDirection::North;
    AttemptResult result = AttemptResult::Conflict;
    std::optional<Point> conflict;

    friend bool operator==(const PumpAttempt&, const PumpAttempt&) = default;
};

// Full state of the algorithm. In both modes the branch is P_[u,|P|] + s
// starting at pos(P_v) = pos(P_u) + s, with s = +w (forward) or -w (backward).
struct AlgoState {
    std::size_t i = 0;
    std::size_t j = 0;
    Side hand = Side::West;  // side the stake stays on
    Mode mode = Mode::Forward;
    std::size_t u = 0;
    std::size_t v = 0;
    std::vector<StakeTile> stake;
    std::vector<PumpAttempt> history;
    std::size_t steps = 0;

    friend bool operator==(const AlgoState&, const AlgoState&) = default;
};

// Requires 1 <= i < j <= |P|, equal types, distinct positions; else PreconditionFailed.
AlgoState initial_state(const PathAssembly& p, std::size_t i, std::size_t j, Side hand = Side::West);

struct StepEvent {
    std::size_t step = 0;
    Mode mode = Mode::Forward;
    std::size_t u = 0;
    std::size_t v = 0;
    std::optional<AttemptResult> attempt;
    std::size_t branch_length = 0;  // new tiles placed by R
    std::optional<Point> branch_end;
    bool zero_length = false;
    std::string note;

    friend bool operator==(const StepEvent&, const StepEvent&) = default;
};

enum class OutcomeKind { Pumpable, Fragile, CageFree, StakeReached, Inconclusive };

std::string_view to_string(OutcomeKind k);
std::string_view to_string(Mode m);

struct Outcome {
    OutcomeKind kind = OutcomeKind::Inconclusive;
    std::optional<PumpableCertificate> pumpable;
    std::optional<FragileCertificate> fragile;
    Mode mode = Mode::Forward;       // CageFree
    std::size_t suffix_index = 0;    // CageFree: n
    std::string reason;
    AlgoState state;
};

struct StepResult {
    bool halted = false;
    AlgoState next;
    std::vector<StepEvent> events;
    std::optional<Outcome> outcome;
};

// Exactly one transition. Lemma ih claims are checked on the new stake when
// `check_invariants` is set; a failure throws InvariantViolation.
StepResult algo_step(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& state,
                     bool check_invariants = true);

struct AlgoLimits {
    std::size_t max_steps = 10000;
    std::optional<Coord> stake_height_budget;  // rows above the seed
    bool check_invariants = true;
    Deadline deadline;
};

struct AlgoRun {
    Outcome outcome;
    std::vector<StepEvent> trace;
};

AlgoRun run_algorithm(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i, std::size_t j,
                      const AlgoLimits& limits = {}, Side hand = Side::West);

// Continues from an arbitrary state.
AlgoRun run_from(const TileAssemblySystem& tas, const PathAssembly& p, AlgoState state, const AlgoLimits& limits);

// Lemma ih checks on a state; returns the violated claim (1..3) if any.
struct InvariantReport {
    int claim = 0;  // 0 when all hold
    std::string detail;
};
InvariantReport check_stake_invariants(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& s);

// Stake positions in the frame of the given mode.
std::vector<Point> stake_points(const PathAssembly& p, const AlgoState& s, Mode frame);

AlgoState mirror(const AlgoState& s);
Outcome mirror(const Outcome& o);

}  // namespace tilepump
