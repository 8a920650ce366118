#include "tilepump/model/pumping.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "tilepump/model/errors.hpp"

namespace tilepump {

PumpedSequence::PumpedSequence(PathAssembly base, std::size_t i, std::size_t j)
    : base_(std::move(base)), i_(i), j_(j)
{
    if (i < 1 || j <= i || j > base_.size())
        throw Error(ErrorCode::InvalidIndex,
                    "pumping needs 1 <= i < j <= |P|, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    if (base_.type(i) != base_.type(j))
        throw Error(ErrorCode::TypeMismatch, "type(P_i) differs from type(P_j)");
    shift_ = base_.pos(j) - base_.pos(i);
    if (shift_.is_zero())
        throw Error(ErrorCode::ZeroPeriod, "P_i and P_j share a position");
}

Placement PumpedSequence::at(std::size_t k) const
{
    if (k < 1)
        throw Error(ErrorCode::InvalidIndex, "Q is 1-indexed");
    if (k < i_)
        return base_.step(k);
    const std::size_t p = period();
    const std::size_t off = (k - i_) % p;
    const auto rep = static_cast<Coord>((k - i_) / p);
    const auto& s = base_.step(i_ + off);
    return {s.pos + rep * shift_, s.tile};
}

std::vector<Placement> PumpedSequence::prefix(std::size_t n) const
{
    std::vector<Placement> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k)
        out.push_back(at(k));
    return out;
}

std::size_t PumpedSequence::iteration(std::size_t k) const
{
    if (k <= j_)
        return 0;
    return (k - j_ - 1) / period() + 1;
}

PumpedSequence pumping(const PathAssembly& p, std::size_t i, std::size_t j)
{
    return PumpedSequence(p, i, j);
}

namespace {

std::vector<Point> period_points(const PumpedSequence& q)
{
    std::vector<Point> pts;
    for (std::size_t k = q.i(); k < q.j(); ++k)
        pts.push_back(q.at(k).pos);
    return pts;
}

}  // namespace

std::size_t decision_horizon(const Assembly& obstacles, const PumpedSequence& q)
{
    std::vector<Point> period = period_points(q);
    std::vector<Point> all = obstacles.positions();
    all.insert(all.end(), period.begin(), period.end());
    const Coord step = std::max<Coord>(1, norm_inf(q.shift()));
    const Coord m = (manhattan_diameter(all) + manhattan_diameter(period)) / step + 2;
    return static_cast<std::size_t>(m);
}

std::size_t self_horizon(const PumpedSequence& q)
{
    std::vector<Point> period = period_points(q);
    const Coord step = std::max<Coord>(1, norm_inf(q.shift()));
    return static_cast<std::size_t>(manhattan_diameter(period) / step + 1);
}

PumpDecision decide_growth(const Assembly& obstacles, const PumpedSequence& q, std::size_t first,
                           std::size_t min_iterations)
{
    PumpDecision out;
    out.horizon = decision_horizon(obstacles, q);
    out.self_horizon = self_horizon(q);
    const std::size_t iterations = std::max({out.horizon, out.self_horizon, min_iterations});
    const std::size_t last = q.end_of_iteration(iterations);
    std::unordered_map<Point, TileId, PointHash> grown;
    for (std::size_t k = std::max<std::size_t>(first, 1); k <= last; ++k) {
        const Placement t = q.at(k);
        if (auto o = obstacles.at(t.pos)) {
            if (*o == t.tile)
                continue;
            out.point = t.pos;
            out.index = k;
            out.iteration = q.iteration(k);
            out.against = ConflictAgainst::Obstacle;
            return out;
        }
        auto [it, inserted] = grown.emplace(t.pos, t.tile);
        if (!inserted && it->second != t.tile) {
            out.point = t.pos;
            out.index = k;
            out.iteration = q.iteration(k);
            out.against = ConflictAgainst::SelfEarlier;
            return out;
        }
    }
    out.infinite = true;
    return out;
}

PumpDecision decide_pumping(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i, std::size_t j,
                            const Assembly& extra)
{
    PumpedSequence q(p, i, j);
    Assembly obstacles = tas.seed();
    for (std::size_t k = 1; k < i; ++k)
        obstacles.place(p.pos(k), p.type(k));
    for (const auto& [pt, t] : extra.raw())
        obstacles.place(pt, t);
    return decide_growth(obstacles, q, i);
}

}  // namespace tilepump
