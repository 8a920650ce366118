#include "tilepump/engine/algorithm.hpp"

#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "tilepump/engine/contact.hpp"
#include "tilepump/model/pumping.hpp"

namespace tilepump {

std::string_view to_string(OutcomeKind k)
{
    switch (k) {
    case OutcomeKind::Pumpable: return "Pumpable";
    case OutcomeKind::Fragile: return "Fragile";
    case OutcomeKind::CageFree: return "CageFree";
    case OutcomeKind::StakeReached: return "StakeReached";
    case OutcomeKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string_view to_string(Mode m)
{
    return m == Mode::Forward ? "forward" : "backward";
}

namespace {

std::string fmt(Point p)
{
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

[[noreturn]] void violated(const std::string& what)
{
    throw Error(ErrorCode::InvariantViolation, what);
}

Vector pair_shift(const PathAssembly& p, const AlgoState& s)
{
    return p.pos(s.j) - p.pos(s.i);
}

bool north_output(const PathAssembly& p, std::size_t i)
{
    return i < p.size() && p.pos(i + 1) == p.pos(i) + unit(Dir::North);
}

// seed + P_[1,base] + (S + offset), with the growth order of everything but the seed.
struct Alpha {
    Assembly tiles;
    std::vector<Placement> order;

    void add(Point pos, TileId t)
    {
        try {
            if (tiles.place(pos, t))
                order.push_back({pos, t});
        } catch (const Error&) {
            violated("stake conflicts with its frame at " + fmt(pos));
        }
    }
};

Alpha build_alpha(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& s, Mode frame)
{
    Alpha a;
    a.tiles = tas.seed();
    const std::size_t base = frame == Mode::Forward ? s.j : s.i;
    for (std::size_t k = 1; k <= base; ++k)
        a.add(p.pos(k), p.type(k));
    const Vector offset = frame == Mode::Forward ? Vector{} : -pair_shift(p, s);
    for (const auto& t : s.stake)
        a.add(t.pos + offset, t.tile);
    return a;
}

Outcome fragile_outcome(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& s,
                        std::vector<Placement> order, Point at, std::string reason)
{
    FragileCertificate cert{std::move(order), at};
    if (auto verdict = verify_fragile(tas, p, cert); !verdict)
        violated("engine produced a rejected fragility certificate: " + verdict.reason);
    Outcome o;
    o.kind = OutcomeKind::Fragile;
    o.fragile = std::move(cert);
    o.reason = std::move(reason);
    o.state = s;
    return o;
}

Outcome pumpable_outcome(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& s, std::size_t a,
                         std::size_t b)
{
    PumpableCertificate cert = make_pumpable_certificate(tas, p, a, b);
    if (auto verdict = verify_pumpable(tas, p, cert); !verdict)
        violated("engine produced a rejected pumpability certificate: " + verdict.reason);
    Outcome o;
    o.kind = OutcomeKind::Pumpable;
    o.pumpable = cert;
    o.reason = "pumping of P_[" + std::to_string(a) + "," + std::to_string(b) + "] grows forever";
    o.state = s;
    return o;
}

Outcome plain_outcome(OutcomeKind kind, const AlgoState& s, std::string reason)
{
    Outcome o;
    o.kind = kind;
    o.reason = std::move(reason);
    o.state = s;
    return o;
}

}  // namespace

AlgoState initial_state(const PathAssembly& p, std::size_t i, std::size_t j, Side hand)
{
    if (i < 1 || j <= i || j > p.size())
        throw Error(ErrorCode::PreconditionFailed, "algorithm needs indices 1 <= i < j <= |P|");
    if (p.type(i) != p.type(j))
        throw Error(ErrorCode::PreconditionFailed, "type(P_i) differs from type(P_j)");
    if (p.pos(i) == p.pos(j))
        throw Error(ErrorCode::PreconditionFailed, "P_i and P_j share a position");
    AlgoState s;
    s.i = i;
    s.j = j;
    s.hand = hand;
    s.mode = Mode::Forward;
    s.u = i;
    s.v = j;
    return s;
}

std::vector<Point> stake_points(const PathAssembly& p, const AlgoState& s, Mode frame)
{
    const Vector offset = frame == Mode::Forward ? Vector{} : -pair_shift(p, s);
    std::vector<Point> out;
    out.reserve(s.stake.size());
    for (const auto& t : s.stake)
        out.push_back(t.pos + offset);
    return out;
}

InvariantReport check_stake_invariants(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& s)
{
    const Vector w = pair_shift(p, s);
    for (std::size_t n = 0; n < s.stake.size(); ++n) {
        const auto& t = s.stake[n];
        if (t.index < 1 || t.index > p.size())
            return {1, "stake tile " + std::to_string(n + 1) + " has no source index"};
        const Point expect = t.provenance == Provenance::FromP ? p.pos(t.index) : p.pos(t.index) + w;
        if (t.pos != expect || t.tile != p.type(t.index))
            return {1, "stake tile " + std::to_string(n + 1) + " does not match its provenance"};
    }

    VisibilityIndex vis(tas.seed(), p);
    const auto fwd = stake_points(p, s, Mode::Forward);
    for (std::size_t anchor : {s.i, s.j}) {
        if (!north_output(p, anchor) || !vis.visible(p.pos(anchor).y, p.pos(anchor).x, s.hand))
            continue;
        const Point a = p.pos(anchor);
        for (std::size_t n = 1; n < fwd.size(); ++n) {
            const Point x = fwd[n - 1], y = fwd[n];
            if (x.x != y.x || std::min(x.y, y.y) != a.y)
                continue;
            const bool beyond = s.hand == Side::West ? x.x < a.x : x.x > a.x;
            if (beyond)
                return {2, "stake crosses the visibility ray of P_" + std::to_string(anchor) + " at " + fmt(x)};
        }
    }

    PathSides sides(p);
    if (auto c = classify_contact(fwd, p, sides); c.kind == ContactKind::Crosses)
        return {3, "stake crosses P at " + fmt(c.point)};
    const auto back = stake_points(p, s, Mode::Backward);
    if (auto c = classify_contact(back, p, sides); c.kind == ContactKind::Crosses)
        return {3, "translated stake crosses P at " + fmt(c.point)};
    return {};
}

StepResult algo_step(const TileAssemblySystem& tas, const PathAssembly& p, const AlgoState& s, bool check_invariants)
{
    if (s.i < 1 || s.j <= s.i || s.j > p.size() || s.u < 1 || s.u > p.size() || s.v < 1 || s.v > p.size())
        throw Error(ErrorCode::PreconditionFailed, "algorithm state indices out of range");
    if (p.type(s.i) != p.type(s.j))
        throw Error(ErrorCode::PreconditionFailed, "type(P_i) differs from type(P_j)");

    const Vector w = pair_shift(p, s);
    const Vector shift = s.mode == Mode::Forward ? w : -w;
    StepResult result;
    StepEvent ev;
    ev.step = s.steps + 1;
    ev.mode = s.mode;
    ev.u = s.u;
    ev.v = s.v;

    auto halt = [&](Outcome o) {
        ev.note = o.reason;
        result.halted = true;
        result.events.push_back(ev);
        result.outcome = std::move(o);
        return result;
    };

    if (p.pos(s.v) != p.pos(s.u) + shift || p.type(s.u) != p.type(s.v))
        violated("state (u,v) is not a translated pair");

    Alpha alpha = build_alpha(tas, p, s, s.mode);
    if (alpha.tiles.at(p.pos(s.v)) != p.type(s.v))
        violated("stake does not end on P_v");

    AlgoState next = s;
    next.steps = s.steps + 1;

    if (s.mode == Mode::Forward) {
        const std::size_t a = std::min(s.u, s.v), b = std::max(s.u, s.v);
        PumpedSequence q(p, a, b);
        Assembly reach = alpha.tiles;
        for (const auto& st : p.steps())
            if (!reach.contains(st.pos))
                reach.place(st.pos, st.tile);
        const std::size_t iterations = std::max(decision_horizon(reach, q), self_horizon(q));
        const std::size_t last = q.end_of_iteration(iterations);

        PumpAttempt attempt{ev.step, s.u, s.v, s.u < s.v ? PumpDirection::North : PumpDirection::South,
                            AttemptResult::Infinite, std::nullopt};
        std::unordered_map<Point, TileId, PointHash> grown;
        std::vector<Placement> zorder;
        for (std::size_t k = s.v; k <= last; ++k) {
            const Placement t = q.at(k);
            if (auto o = alpha.tiles.at(t.pos)) {
                if (*o == t.tile)
                    continue;
                attempt.result = AttemptResult::Conflict;
                attempt.conflict = t.pos;
                break;
            }
            if (auto g = grown.find(t.pos); g != grown.end()) {
                if (g->second == t.tile)
                    continue;
                attempt.result = AttemptResult::Conflict;
                attempt.conflict = t.pos;
                break;
            }
            if (auto idx = p.index_of(t.pos); idx && p.type(*idx) != t.tile) {
                attempt.result = AttemptResult::BreaksP;
                attempt.conflict = t.pos;
                next.history.push_back(attempt);
                ev.attempt = attempt.result;
                std::vector<Placement> order = alpha.order;
                order.insert(order.end(), zorder.begin(), zorder.end());
                order.push_back(t);
                return halt(fragile_outcome(tas, p, next, std::move(order), t.pos,
                                            "pumping of P_[" + std::to_string(a) + "," + std::to_string(b) +
                                                "] grown first blocks P at " + fmt(t.pos)));
            }
            grown.emplace(t.pos, t.tile);
            zorder.push_back(t);
        }
        next.history.push_back(attempt);
        ev.attempt = attempt.result;
        if (attempt.result == AttemptResult::Infinite) {
            if (decide_pumping(tas, p, a, b).infinite)
                return halt(pumpable_outcome(tas, p, next, a, b));
            violated("pumping agrees with alpha and P yet P is not pumpable between " + std::to_string(a) + " and " +
                     std::to_string(b));
        }
    }

    const PathSides sides(p);
    const LocalSide forbidden = s.hand == Side::West ? LocalSide::Right : LocalSide::Left;
    const Vector to_forward = s.mode == Mode::Forward ? Vector{} : w;
    const Provenance prov = s.mode == Mode::Forward ? Provenance::FromPTranslated : Provenance::FromP;

    std::vector<StakeTile> added;
    if (s.stake.empty())
        added.push_back({p.pos(s.v) + to_forward, p.type(s.u), prov, s.u});
    std::vector<Placement> fresh;
    Point x = p.pos(s.v);
    std::optional<std::size_t> stop;
    for (std::size_t t = 1; s.u + t <= p.size(); ++t) {
        const std::size_t src = s.u + t;
        const Placement y{p.pos(src) + shift, p.type(src)};
        if (auto n = p.index_of(x)) {
            auto d = step_dir(x, y.pos);
            if (d && sides.side(*n, *d) == forbidden) {
                stop = t - 1;
                break;
            }
        }
        if (auto o = alpha.tiles.at(y.pos)) {
            if (*o != y.tile) {
                next.stake.insert(next.stake.end(), added.begin(), added.end());
                return halt(plain_outcome(OutcomeKind::Inconclusive, next,
                                          "branch blocked at " + fmt(y.pos) + " by a tile of another type"));
            }
        } else if (auto m = p.index_of(y.pos); m && p.type(*m) != y.tile) {
            std::vector<Placement> order = alpha.order;
            order.insert(order.end(), fresh.begin(), fresh.end());
            order.push_back(y);
            next.stake.insert(next.stake.end(), added.begin(), added.end());
            ev.branch_length = fresh.size() + 1;
            ev.branch_end = y.pos;
            return halt(fragile_outcome(tas, p, next, std::move(order), y.pos,
                                        "branch grown first blocks P at " + fmt(y.pos)));
        } else {
            fresh.push_back(y);
        }
        added.push_back({y.pos + to_forward, y.tile, prov, src});
        x = y.pos;
    }

    ev.branch_length = fresh.size();
    ev.branch_end = x;
    if (!stop) {
        next.stake.insert(next.stake.end(), added.begin(), added.end());
        Outcome o = plain_outcome(OutcomeKind::CageFree, next,
                                  std::string("branch from P_") + std::to_string(s.u) + " never turns right from P");
        o.mode = s.mode;
        o.suffix_index = s.u;
        return halt(std::move(o));
    }

    const std::size_t n = *p.index_of(x);
    next.mode = s.mode == Mode::Forward ? Mode::Backward : Mode::Forward;
    next.u = n;
    next.v = s.u + *stop;
    next.stake.insert(next.stake.end(), added.begin(), added.end());
    ev.zero_length = *stop == 0;
    if (ev.zero_length)
        ev.note = "zero-length branch: immediate mode switch";

    if (check_invariants) {
        if (auto r = check_stake_invariants(tas, p, next); r.claim != 0)
            throw Error(ErrorCode::InvariantViolation, "claim " + std::to_string(r.claim) + ": " + r.detail);
    }
    result.next = std::move(next);
    result.events.push_back(ev);
    return result;
}

AlgoRun run_from(const TileAssemblySystem& tas, const PathAssembly& p, AlgoState state, const AlgoLimits& limits)
{
    AlgoRun run;
    std::set<std::tuple<int, std::size_t, std::size_t>> seen;
    seen.emplace(static_cast<int>(state.mode), state.u, state.v);
    while (true) {
        if (state.steps >= limits.max_steps) {
            run.outcome = plain_outcome(OutcomeKind::Inconclusive, state, "step limit reached");
            return run;
        }
        limits.deadline.check();
        StepResult r = algo_step(tas, p, state, limits.check_invariants);
        run.trace.insert(run.trace.end(), r.events.begin(), r.events.end());
        if (r.halted) {
            run.outcome = std::move(*r.outcome);
            return run;
        }
        state = std::move(r.next);
        if (limits.stake_height_budget && p.pos(state.u).y - tas.seed_top() > *limits.stake_height_budget) {
            run.outcome = plain_outcome(OutcomeKind::StakeReached, state,
                                        "P_u rose above the stake height budget");
            return run;
        }
        if (!seen.emplace(static_cast<int>(state.mode), state.u, state.v).second) {
            run.outcome = plain_outcome(OutcomeKind::Inconclusive, state, "algorithm revisits a state");
            return run;
        }
    }
}

AlgoRun run_algorithm(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i, std::size_t j,
                      const AlgoLimits& limits, Side hand)
{
    return run_from(tas, p, initial_state(p, i, j, hand), limits);
}

AlgoState mirror(const AlgoState& s)
{
    AlgoState m = s;
    m.hand = other(s.hand);
    for (auto& t : m.stake)
        t.pos = mirror(t.pos);
    for (auto& h : m.history)
        if (h.conflict)
            h.conflict = mirror(*h.conflict);
    return m;
}

Outcome mirror(const Outcome& o)
{
    Outcome m = o;
    m.state = mirror(o.state);
    if (m.fragile) {
        for (auto& t : m.fragile->growth_order)
            t.pos = mirror(t.pos);
        m.fragile->conflict_point = mirror(m.fragile->conflict_point);
    }
    m.reason.clear();
    return m;
}

}  // namespace tilepump
