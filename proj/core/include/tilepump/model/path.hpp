#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tilepump/model/assembly.hpp"

namespace tilepump {

// A producible path assembly. Indices are 1-based throughout: step(1) is the
// tile attached to the seed.
class PathAssembly {
public:
    PathAssembly() = default;

    // Validates simplicity, adjacency, interaction and seed attachment.
    // Failures throw InvalidPath carrying the offending step index.
    static PathAssembly make(const TileAssemblySystem& tas, std::vector<Placement> steps);
    // No validation; for translated or derived sequences built internally.
    static PathAssembly unchecked(std::vector<Placement> steps);

    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const Placement& step(std::size_t i) const { return steps_[i - 1]; }
    Point pos(std::size_t i) const { return steps_[i - 1].pos; }
    TileId type(std::size_t i) const { return steps_[i - 1].tile; }
    std::span<const Placement> steps() const { return steps_; }

    std::optional<std::size_t> index_of(Point p) const;

    // P_[1,k].
    PathAssembly prefix(std::size_t k) const;
    // Induced assembly of P_[from,to]; both bounds inclusive.
    Assembly induced(std::size_t from, std::size_t to) const;
    Assembly induced() const { return induced(1, size()); }

    Box bounds() const;

    friend bool operator==(const PathAssembly& a, const PathAssembly& b) { return a.steps_ == b.steps_; }

private:
    std::vector<Placement> steps_;
    std::unordered_map<Point, std::size_t, PointHash> index_;
};

PathAssembly mirror(const PathAssembly& p);

// First seed neighbour of P_1 it binds to, scanning N, E, S, W.
std::optional<Dir> seed_attachment(const TileAssemblySystem& tas, const PathAssembly& p);

}  // namespace tilepump
