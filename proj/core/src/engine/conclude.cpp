#include "tilepump/engine/conclude.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>

#include "tilepump/model/pumping.hpp"
#include "tilepump/movies/cagefree.hpp"
#include "tilepump/movies/wml.hpp"

namespace tilepump {

namespace {

std::string fmt(Point p)
{
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

bool conclusive(OutcomeKind k)
{
    return k == OutcomeKind::Pumpable || k == OutcomeKind::Fragile;
}

int rank(OutcomeKind k)
{
    switch (k) {
    case OutcomeKind::Pumpable: return 0;
    case OutcomeKind::Fragile: return 1;
    case OutcomeKind::StakeReached: return 2;
    case OutcomeKind::CageFree: return 3;
    case OutcomeKind::Inconclusive: return 4;
    }
    return 5;
}

std::optional<Outcome> as_pumpable(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t a,
                                   std::size_t b, const AlgoState& state, std::string reason)
{
    PumpableCertificate cert = make_pumpable_certificate(tas, p, a, b);
    if (!verify_pumpable(tas, p, cert))
        return std::nullopt;
    Outcome o;
    o.kind = OutcomeKind::Pumpable;
    o.pumpable = cert;
    o.reason = std::move(reason);
    o.state = state;
    return o;
}

std::optional<Outcome> as_fragile(const TileAssemblySystem& tas, const PathAssembly& p, FragileCertificate cert,
                                  const AlgoState& state, std::string reason)
{
    if (!verify_fragile(tas, p, cert))
        return std::nullopt;
    Outcome o;
    o.kind = OutcomeKind::Fragile;
    o.fragile = std::move(cert);
    o.reason = std::move(reason);
    o.state = state;
    return o;
}

// Places tiles in order from the seed until one lands on a position of P with
// another type. Same-type repeats are skipped; a clash off P abandons the try.
std::optional<FragileCertificate> grow_until_conflict(const TileAssemblySystem& tas, const PathAssembly& p,
                                                      const std::vector<Placement>& order)
{
    Assembly grown = tas.seed();
    std::vector<Placement> used;
    for (const auto& t : order) {
        if (auto o = grown.at(t.pos)) {
            if (*o == t.tile)
                continue;
            return std::nullopt;
        }
        used.push_back(t);
        if (auto idx = p.index_of(t.pos); idx && p.type(*idx) != t.tile)
            return FragileCertificate{std::move(used), t.pos};
        grown.place(t.pos, t.tile);
    }
    return std::nullopt;
}

// Blocking assemblies for a north attempt (u', v') made after the stake was
// reached at (u*, v*) with stake S*.
std::optional<FragileCertificate> north_candidates(const TileAssemblySystem& tas, const PathAssembly& p,
                                                   const AlgoState& reached, const PumpAttempt& attempt)
{
    const std::size_t a = std::min(attempt.u, attempt.v), b = std::max(attempt.u, attempt.v);
    if (a >= b || p.type(a) != p.type(b))
        return std::nullopt;
    const Vector w = p.pos(reached.j) - p.pos(reached.i);
    PumpedSequence q(p, a, b);
    Assembly reach = tas.seed();
    for (const auto& t : p.steps())
        reach.place(t.pos, t.tile);
    const std::size_t last = q.end_of_iteration(std::max(decision_horizon(reach, q), self_horizon(q)) + 1);

    for (std::size_t start : {reached.u, reached.v}) {
        if (start > a)
            continue;
        for (int frame = 0; frame < 2; ++frame) {
            // frame 0: seed + P_[1,i] + (S* - w) + P_[start,a], then the pumping.
            // frame 1: seed + P_[1,j] + S* + (P_[start,a] + w), then the pumping shifted by w.
            const Vector shift = frame == 0 ? Vector{} : w;
            const Vector stake_shift = frame == 0 ? -w : Vector{};
            std::vector<Placement> order;
            const std::size_t base = frame == 0 ? reached.i : reached.j;
            for (std::size_t k = 1; k <= base; ++k)
                order.push_back(p.step(k));
            for (const auto& t : reached.stake)
                order.push_back({t.pos + stake_shift, t.tile});
            for (std::size_t k = start; k <= a; ++k)
                order.push_back({p.pos(k) + shift, p.type(k)});
            for (std::size_t k = a + 1; k <= last; ++k) {
                const Placement t = q.at(k);
                order.push_back({t.pos + shift, t.tile});
            }
            if (auto cert = grow_until_conflict(tas, p, order); cert && verify_fragile(tas, p, *cert))
                return cert;
        }
    }
    return std::nullopt;
}

void continue_after_stake(const TileAssemblySystem& tas, const PathAssembly& p, const ConcludeLimits& limits,
                          HandReport& r)
{
    const AlgoState reached = r.outcome.state;
    AlgoState state = reached;
    std::size_t south = 0;
    for (const auto& h : state.history)
        south += h.direction == PumpDirection::South;

    std::set<std::tuple<int, std::size_t, std::size_t>> seen;
    seen.emplace(static_cast<int>(state.mode), state.u, state.v);
    for (std::size_t n = 0; n < limits.continuation_steps; ++n) {
        limits.deadline.check();
        const std::size_t before = state.history.size();
        StepResult sr = algo_step(tas, p, state, limits.check_invariants);
        r.trace.insert(r.trace.end(), sr.events.begin(), sr.events.end());
        if (sr.halted) {
            if (conclusive(sr.outcome->kind)) {
                r.outcome = std::move(*sr.outcome);
                r.notes.push_back("continuation halted: " + r.outcome.reason);
            } else {
                r.notes.push_back("continuation stopped: " + sr.outcome->reason);
            }
            state = sr.outcome->state;
            break;
        }
        state = std::move(sr.next);
        for (std::size_t h = before; h < state.history.size(); ++h) {
            const PumpAttempt& at = state.history[h];
            const std::size_t a = std::min(at.u, at.v), b = std::max(at.u, at.v);
            if (decide_pumping(tas, p, a, b).infinite) {
                if (auto o = as_pumpable(tas, p, a, b, state,
                                         "segment P_[" + std::to_string(a) + "," + std::to_string(b) +
                                             "] met after the stake pumps forever")) {
                    r.outcome = std::move(*o);
                    return;
                }
            }
            if (at.direction == PumpDirection::North && at.result == AttemptResult::Conflict) {
                if (auto cert = north_candidates(tas, p, reached, at)) {
                    if (auto o = as_fragile(tas, p, std::move(*cert), state,
                                            "north attempt P_[" + std::to_string(a) + "," + std::to_string(b) +
                                                "] grown beside the stake blocks P")) {
                        r.outcome = std::move(*o);
                        return;
                    }
                }
            }
            if (at.direction == PumpDirection::South)
                ++south;
        }
        if (south > limits.south_attempt_cap) {
            r.notes.push_back("south attempt cap reached");
            break;
        }
        if (!seen.emplace(static_cast<int>(state.mode), state.u, state.v).second) {
            r.notes.push_back("continuation revisits a state");
            break;
        }
    }
    r.trous = south_pump_monitor(p, state.history, p.pos(state.j) - p.pos(state.i));
    if (r.trous.kind == TrousCheck::Kind::Violation)
        r.notes.push_back("south pump monitor: " + r.trous.detail);
}

std::optional<Outcome> try_movies(const TileAssemblySystem& tas, const PathAssembly& p, const ConcludeLimits& limits,
                                  HandReport& r)
{
    const AlgoState& state = r.outcome.state;
    auto accept = [&](const WmlResult& res, const std::string& where) -> std::optional<Outcome> {
        r.notes.push_back(where + ": window movie pump " + to_string(res.kind) +
                          (res.reason.empty() ? "" : " (" + res.reason + ")"));
        if (res.kind == WmlResult::Kind::Pumpable)
            return as_pumpable(tas, p, res.pumpable->i, res.pumpable->j, state,
                               "window movies repeat; P_[" + std::to_string(res.u) + "," + std::to_string(res.v) +
                                   "] pumps forever");
        if (res.kind == WmlResult::Kind::Fragile)
            return as_fragile(tas, p, *res.fragile, state, "window movies repeat; pumped assembly blocks P");
        return std::nullopt;
    };

    if (r.outcome.kind == OutcomeKind::CageFree && state.i >= 1 && state.j <= p.size()) {
        Vector v = p.pos(state.j) - p.pos(state.i);
        if (v.y < 0)
            v = -v;
        if (v.y > 0) {
            try {
                const auto seps = cagefree_separators(tas, p, r.outcome.suffix_index, v);
                std::vector<Movie> movies;
                for (const auto& s : seps)
                    movies.push_back(record_movie(tas, p, s));
                for (std::size_t b = 0; b < seps.size(); ++b)
                    for (std::size_t a = 0; a < b; ++a) {
                        const Vector d = seps[b].separator.offset - seps[a].separator.offset;
                        if (movies[a].empty() || !movies_equal_upto(movies[a], movies[b], d))
                            continue;
                        if (auto o = accept(wml_pump(tas, p, seps[a], d), "separator pair"))
                            return o;
                    }
                r.notes.push_back("cage-free: " + std::to_string(seps.size()) + " separators, no usable repeat");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PreconditionFailed && e.code() != ErrorCode::WindowClipError)
                    throw;
                r.notes.push_back(std::string("cage-free separators unavailable: ") + e.what());
            }
        }
    }

    const Coord margin = 2 * static_cast<Coord>(tas.tiles().size()) + 2;
    const DietConfig diet = limits.diet.value_or(DietConfig{margin, margin});
    const DietResult d = diet_check(tas, p, diet);
    r.notes.push_back("diet check: " + to_string(d.kind));
    if (d.kind == DietResult::Kind::RepeatFound)
        return accept(wml_pump(tas, p, *d.w1, d.v), "diet repeat");
    return std::nullopt;
}

bool better(const HandReport& a, const HandReport& b)
{
    const int ra = rank(a.outcome.kind), rb = rank(b.outcome.kind);
    if (ra != rb)
        return ra < rb;
    const auto pa = std::make_pair(a.outcome.state.i, a.outcome.state.j);
    const auto pb = std::make_pair(b.outcome.state.i, b.outcome.state.j);
    if (pa != pb)
        return pa < pb;
    const std::size_t la = a.outcome.fragile ? a.outcome.fragile->growth_order.size() : 0;
    const std::size_t lb = b.outcome.fragile ? b.outcome.fragile->growth_order.size() : 0;
    if (la != lb)
        return la < lb;
    return a.hand == Side::West && b.hand != Side::West;
}

}  // namespace

HandReport analyze_hand(const TileAssemblySystem& tas, const PathAssembly& p, const ConcludeLimits& limits, Side hand)
{
    HandReport r;
    r.hand = hand;
    const Coord tiles = static_cast<Coord>(tas.tiles().size());
    r.pair = find_initial_pair(tas, p, limits.height_budget.value_or(default_height_budget(tas)), hand);

    AlgoLimits algo;
    algo.max_steps = limits.max_steps;
    algo.check_invariants = limits.check_invariants;
    algo.deadline = limits.deadline;

    switch (r.pair.kind) {
    case InitialPair::Kind::TooShort:
        r.outcome.kind = OutcomeKind::Inconclusive;
        r.outcome.reason = "too short: " + r.pair.reason;
        return r;
    case InitialPair::Kind::UTurnFound: {
        r.notes.push_back("nice U-turn (" + std::to_string(r.pair.i) + "," + std::to_string(r.pair.j) + "," +
                          std::to_string(r.pair.k) + "); running on P_[1," + std::to_string(r.pair.k) + "]");
        AlgoRun run = run_algorithm(tas, p.prefix(r.pair.k), r.pair.i, r.pair.j, algo, hand);
        r.trace = std::move(run.trace);
        r.outcome = std::move(run.outcome);
        if (r.outcome.pumpable && !verify_pumpable(tas, p, *r.outcome.pumpable)) {
            r.notes.push_back("prefix pumpability certificate rejected on P");
            r.outcome.kind = OutcomeKind::Inconclusive;
            r.outcome.pumpable.reset();
        }
        if (r.outcome.fragile && !verify_fragile(tas, p, *r.outcome.fragile)) {
            r.notes.push_back("prefix fragility certificate rejected on P");
            r.outcome.kind = OutcomeKind::Inconclusive;
            r.outcome.fragile.reset();
        }
        break;
    }
    case InitialPair::Kind::Pair: {
        algo.stake_height_budget = limits.stake_height_budget.value_or(8 * tiles);
        AlgoRun run = run_algorithm(tas, p, r.pair.i, r.pair.j, algo, hand);
        r.trace = std::move(run.trace);
        r.outcome = std::move(run.outcome);
        if (r.outcome.kind == OutcomeKind::StakeReached)
            continue_after_stake(tas, p, limits, r);
        break;
    }
    }
    if (!conclusive(r.outcome.kind))
        if (auto o = try_movies(tas, p, limits, r))
            r.outcome = std::move(*o);
    return r;
}

FinalReport conclude(const TileAssemblySystem& tas, const PathAssembly& p, const ConcludeLimits& limits)
{
    FinalReport f;
    f.hands.push_back(analyze_hand(tas, p, limits, Side::West));
    f.hands.push_back(analyze_hand(tas, p, limits, Side::East));
    const HandReport& best = better(f.hands[1], f.hands[0]) ? f.hands[1] : f.hands[0];

    f.outcome = best.outcome.kind;
    f.pumpable = best.outcome.pumpable;
    f.fragile = best.outcome.fragile;
    f.hand = best.hand;
    f.pair = best.pair;
    f.reason = best.outcome.reason;
    f.trace = best.trace;
    f.notes = best.notes;
    f.trous = best.trous;
    f.detail = best.outcome;

    if (!conclusive(f.outcome) && p.size() <= limits.fragility_max_length) {
        try {
            FragilityLimits fl = limits.fragility;
            fl.deadline = limits.deadline;
            if (auto wit = fragility_witness(tas, p, fl)) {
                FragileCertificate cert{wit->growth_order, wit->conflict_point};
                if (verify_fragile(tas, p, cert)) {
                    f.notes.push_back("short path: exhaustive search found a blocking assembly");
                    f.outcome = OutcomeKind::Fragile;
                    f.fragile = std::move(cert);
                    f.detail.kind = OutcomeKind::Fragile;
                    f.detail.fragile = f.fragile;
                    f.reason = "assembly grown first conflicts with P at " + fmt(wit->conflict_point);
                    f.detail.reason = f.reason;
                }
            } else {
                f.notes.push_back("short path: no blocking assembly inside the search window");
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SearchBudgetExhausted)
                throw;
            f.notes.push_back("short path: fragility search budget exhausted");
        }
    }
    return f;
}

}  // namespace tilepump
