#include "tilepump/model/assembly.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "tilepump/model/errors.hpp"

namespace tilepump {

Assembly::Assembly(std::span<const Placement> tiles)
{
    for (const auto& t : tiles)
        place(t.pos, t.tile);
}

bool Assembly::place(Point p, TileId t)
{
    auto [it, inserted] = tiles_.emplace(p, t);
    if (inserted)
        return true;
    if (it->second != t)
        throw Error(ErrorCode::PositionOccupied,
                    "position (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") holds another type");
    return false;
}

std::vector<Placement> Assembly::sorted() const
{
    std::vector<Placement> out;
    out.reserve(tiles_.size());
    for (const auto& [p, t] : tiles_)
        out.push_back({p, t});
    std::sort(out.begin(), out.end(),
              [](const Placement& a, const Placement& b) { return row_major_less(a.pos, b.pos); });
    return out;
}

std::vector<Point> Assembly::positions() const
{
    std::vector<Point> out;
    out.reserve(tiles_.size());
    for (const auto& [p, t] : tiles_)
        out.push_back(p);
    std::sort(out.begin(), out.end(), RowMajorLess{});
    return out;
}

Box Assembly::bounds() const
{
    Box b;
    for (const auto& [p, t] : tiles_)
        b = b.including(p);
    return b;
}

namespace {

template <class Edge>
bool connected_by(const Assembly& a, Edge edge)
{
    if (a.empty())
        return true;
    std::unordered_set<Point, PointHash> seen;
    std::deque<Point> queue;
    const Point start = a.raw().begin()->first;
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (Dir d : kDirs) {
            Point q = p + unit(d);
            if (!a.contains(q) || seen.count(q) || !edge(p, d, q))
                continue;
            seen.insert(q);
            queue.push_back(q);
        }
    }
    return seen.size() == a.size();
}

}  // namespace

bool is_connected(const Assembly& a)
{
    return connected_by(a, [](Point, Dir, Point) { return true; });
}

bool is_stable(const TileSet& tiles, const Assembly& a)
{
    if (a.empty())
        throw Error(ErrorCode::InvalidAssembly, "empty assembly");
    return connected_by(a, [&](Point p, Dir d, Point q) { return tiles.interacts(*a.at(p), d, *a.at(q)); });
}

bool attachable(const TileSet& tiles, const Assembly& a, Point p, TileId t)
{
    if (a.contains(p))
        throw Error(ErrorCode::PositionOccupied,
                    "position (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is occupied");
    for (Dir d : kDirs)
        if (auto n = a.at(p + unit(d)); n && tiles.interacts(t, d, *n))
            return true;
    return false;
}

std::optional<Point> conflict(const Assembly& a, const Assembly& b)
{
    const Assembly& small = a.size() <= b.size() ? a : b;
    const Assembly& large = a.size() <= b.size() ? b : a;
    std::optional<Point> best;
    for (const auto& [p, t] : small.raw()) {
        auto o = large.at(p);
        if (o && *o != t && (!best || row_major_less(p, *best)))
            best = p;
    }
    return best;
}

TileAssemblySystem TileAssemblySystem::make(TileSet tiles, Assembly seed)
{
    if (seed.empty())
        throw Error(ErrorCode::InvalidAssembly, "seed is empty");
    for (const auto& [p, t] : seed.raw())
        if (t >= tiles.size())
            throw Error(ErrorCode::UnknownTile, "seed references a tile outside the tile set");
    if (!is_connected(seed))
        throw Error(ErrorCode::InvalidAssembly, "seed domain is not connected");
    if (!is_stable(tiles, seed))
        throw Error(ErrorCode::UnstableSeed, "seed binding graph is not connected");
    TileAssemblySystem tas;
    tas.tiles_ = std::move(tiles);
    tas.seed_ = std::move(seed);
    tas.seed_top_ = tas.seed_.bounds().max_y;
    return tas;
}

Assembly grow_sequence(const TileSet& tiles, Assembly start, std::span<const Placement> order)
{
    for (std::size_t s = 0; s < order.size(); ++s) {
        const auto& [p, t] = order[s];
        if (t >= tiles.size())
            throw Error(ErrorCode::GrowthError, "unknown tile", s + 1);
        if (auto existing = start.at(p)) {
            if (*existing == t)
                continue;
            throw Error(ErrorCode::GrowthError,
                        "step conflicts with occupied position (" + std::to_string(p.x) + "," +
                            std::to_string(p.y) + ")",
                        s + 1);
        }
        if (!attachable(tiles, start, p, t))
            throw Error(ErrorCode::GrowthError,
                        "tile at (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") cannot attach", s + 1);
        start.place(p, t);
    }
    return start;
}

Assembly grow_sequence(const TileAssemblySystem& tas, std::span<const Placement> order)
{
    return grow_sequence(tas.tiles(), tas.seed(), order);
}

std::optional<std::vector<Placement>> binding_order(const TileSet& tiles, const Assembly& start,
                                                    const Assembly& target)
{
    Assembly grown = start;
    std::vector<Placement> order;
    std::deque<Point> frontier;
    for (Point p : start.positions())
        frontier.push_back(p);
    std::size_t missing = 0;
    for (const auto& [p, t] : target.raw()) {
        auto s = start.at(p);
        if (s && *s != t)
            return std::nullopt;
        if (!s)
            ++missing;
    }
    while (!frontier.empty()) {
        const Point at = frontier.front();
        frontier.pop_front();
        for (Dir d : kDirs) {
            const Point q = at + unit(d);
            if (grown.contains(q))
                continue;
            auto t = target.at(q);
            if (!t || !attachable(tiles, grown, q, *t))
                continue;
            grown.place(q, *t);
            order.push_back({q, *t});
            frontier.push_back(q);
        }
    }
    if (order.size() != missing)
        return std::nullopt;
    return order;
}

Assembly mirror(const Assembly& a)
{
    Assembly m;
    for (const auto& [p, t] : a.raw())
        m.place(mirror(p), t);
    return m;
}

}  // namespace tilepump
