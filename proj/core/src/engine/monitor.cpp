#include "tilepump/engine/monitor.hpp"

#include <algorithm>
#include <unordered_set>

namespace tilepump {

std::string to_string(TrousCheck::Kind k)
{
    switch (k) {
    case TrousCheck::Kind::Vacuous: return "vacuous";
    case TrousCheck::Kind::Confirmed: return "confirmed";
    case TrousCheck::Kind::Violation: return "violation";
    }
    return "?";
}

namespace {

std::unordered_set<Point, PointHash> pumped_positions(const PathAssembly& p, std::size_t a, std::size_t b,
                                                      Coord rounds)
{
    const Vector s = p.pos(b) - p.pos(a);
    std::unordered_set<Point, PointHash> out;
    for (Coord t = 0; t <= rounds; ++t)
        for (std::size_t k = a; k <= b; ++k)
            out.insert(p.pos(k) + t * s);
    return out;
}

}  // namespace

TrousCheck south_pump_monitor(const PathAssembly& p, const std::vector<PumpAttempt>& history, Vector w)
{
    const std::vector<Point> pts = [&] {
        std::vector<Point> v;
        for (const auto& t : p.steps())
            v.push_back(t.pos);
        return v;
    }();
    const Coord rounds = manhattan_diameter(pts) / std::max<Coord>(1, norm_inf(w)) + 2;

    TrousCheck found;
    for (std::size_t x = 0; x < history.size(); ++x) {
        const auto& first = history[x];
        if (first.direction != PumpDirection::South)
            continue;
        const std::size_t a = std::min(first.u, first.v), b = std::max(first.u, first.v);
        const auto q1 = pumped_positions(p, a, b, rounds);
        for (std::size_t y = x + 1; y < history.size(); ++y) {
            const auto& second = history[y];
            if (second.direction != PumpDirection::South)
                continue;
            const std::size_t c = std::min(second.u, second.v), d = std::max(second.u, second.v);
            if (c <= b)
                continue;
            const auto q2 = pumped_positions(p, c, d, rounds);
            const bool meet = std::any_of(q2.begin(), q2.end(), [&](Point pt) { return q1.count(pt) != 0; });
            if (!meet)
                continue;
            std::optional<PumpAttempt> north;
            for (std::size_t z = x + 1; z < y && !north; ++z)
                if (history[z].direction == PumpDirection::North)
                    north = history[z];
            if (!north) {
                TrousCheck bad;
                bad.kind = TrousCheck::Kind::Violation;
                bad.first = first;
                bad.second = second;
                bad.detail = "no north attempt between south attempts at steps " + std::to_string(first.step) +
                             " and " + std::to_string(second.step);
                return bad;
            }
            if (found.kind == TrousCheck::Kind::Vacuous) {
                found.kind = TrousCheck::Kind::Confirmed;
                found.first = first;
                found.second = second;
                found.confirming = north;
                found.detail = "north attempt at step " + std::to_string(north->step);
            }
        }
    }
    return found;
}

}  // namespace tilepump
