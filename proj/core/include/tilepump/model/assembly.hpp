#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tilepump/model/geometry.hpp"
#include "tilepump/model/tiles.hpp"

namespace tilepump {

struct Placement {
    Point pos;
    TileId tile = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

// Finite partial map from cells to tile types. Connectivity and stability are
// properties checked by the free functions below, not enforced on every edit.
class Assembly {
public:
    Assembly() = default;
    explicit Assembly(std::span<const Placement> tiles);  // throws PositionOccupied on disagreement

    std::optional<TileId> at(Point p) const
    {
        auto it = tiles_.find(p);
        if (it == tiles_.end())
            return std::nullopt;
        return it->second;
    }
    bool contains(Point p) const { return tiles_.count(p) != 0; }
    std::size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }

    // Places t at p. Placing the same type again is a no-op and returns false;
    // a different type throws PositionOccupied.
    bool place(Point p, TileId t);
    void erase(Point p) { tiles_.erase(p); }

    std::vector<Placement> sorted() const;  // row-major order
    std::vector<Point> positions() const;   // row-major order
    Box bounds() const;

    const std::unordered_map<Point, TileId, PointHash>& raw() const { return tiles_; }

    friend bool operator==(const Assembly& a, const Assembly& b) { return a.tiles_ == b.tiles_; }

private:
    std::unordered_map<Point, TileId, PointHash> tiles_;
};

bool is_connected(const Assembly& a);

// Temperature 1: stable iff the binding graph is connected. Empty throws InvalidAssembly.
bool is_stable(const TileSet& tiles, const Assembly& a);

// True when t placed at p binds some neighbour. Occupied p throws PositionOccupied.
bool attachable(const TileSet& tiles, const Assembly& a, Point p, TileId t);

// Least (row-major) point where both are defined with different types.
std::optional<Point> conflict(const Assembly& a, const Assembly& b);

class TileAssemblySystem {
public:
    // Validates the seed: non-empty, connected, stable. Temperature is fixed at 1.
    static TileAssemblySystem make(TileSet tiles, Assembly seed);

    const TileSet& tiles() const { return tiles_; }
    const Assembly& seed() const { return seed_; }
    static constexpr int temperature() { return 1; }
    Coord seed_top() const { return seed_top_; }

private:
    TileSet tiles_;
    Assembly seed_;
    Coord seed_top_ = 0;
};

// Folds single attachments over `start`. A placement matching an existing tile
// is a no-op; anything else that cannot attach throws GrowthError with the
// 1-based step index.
Assembly grow_sequence(const TileSet& tiles, Assembly start, std::span<const Placement> order);
Assembly grow_sequence(const TileAssemblySystem& tas, std::span<const Placement> order);

// Attachment order for the tiles of `target` missing from `start`, found by
// breadth-first search over bonds (row-major among ties). Absent when some tile
// can never attach.
std::optional<std::vector<Placement>> binding_order(const TileSet& tiles, const Assembly& start,
                                                    const Assembly& target);

Assembly mirror(const Assembly& a);

}  // namespace tilepump
