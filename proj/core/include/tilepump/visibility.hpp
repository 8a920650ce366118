#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tilepump/model/path.hpp"

namespace tilepump {

enum class Side { East, West };

constexpr Side other(Side s) { return s == Side::East ? Side::West : Side::East; }
constexpr Dir toward(Side s) { return s == Side::East ? Dir::East : Dir::West; }

enum class GlueKind { NorthOutput, SouthOutput };

// A vertical step P_index -> P_index+1. `level` is the lower of the two rows,
// so the edge separates rows level and level+1 in column x. Index 0 denotes
// the seed-to-P_1 junction when it is requested explicitly.
struct GlueEdge {
    std::size_t index = 0;
    Coord level = 0;
    Coord x = 0;
    GlueKind kind = GlueKind::NorthOutput;

    friend bool operator==(const GlueEdge&, const GlueEdge&) = default;
};

// Horizontal dual ray from the edge between (x, level) and (x, level+1).
struct DualRay {
    Coord level = 0;
    Coord x = 0;
    Side toward = Side::East;

    friend bool operator==(const DualRay&, const DualRay&) = default;
};

struct VisibilityReport {
    Side side = Side::East;
    std::vector<GlueEdge> visible;  // path order
    std::vector<DualRay> rays;      // parallel to `visible`

    friend bool operator==(const VisibilityReport&, const VisibilityReport&) = default;
};

// Vertical steps of P_[1,upto], in path order.
std::vector<GlueEdge> glue_edges(const PathAssembly& p, std::size_t upto = std::numeric_limits<std::size_t>::max());

// As above, optionally preceded by the seed junction when it is vertical.
std::vector<GlueEdge> glue_edges(const TileAssemblySystem& tas, const PathAssembly& p, bool include_seed_junction);

// Per-level extreme columns of the glue edges of seed + P_[1,k]. An edge at
// (level, x) is visible from the east iff no other edge on its level lies at a
// column >= x; symmetric for the west.
class VisibilityIndex {
public:
    VisibilityIndex(const Assembly& seed, const PathAssembly& p,
                    std::size_t upto = std::numeric_limits<std::size_t>::max());

    void add_path_edge(Coord level, Coord x);
    bool visible(Coord level, Coord x, Side side) const;

private:
    std::unordered_map<Coord, std::pair<Coord, Coord>> extremes_;  // level -> (min x, max x)
};

VisibilityReport visible_glues(const PathAssembly& p, const Assembly& seed, Side side);

struct WatershedResult {
    bool split = true;
    Coord y0 = 0;
    std::optional<std::pair<GlueEdge, GlueEdge>> evidence;  // (north glue, south glue at or above it)
};

// Requires the last tile to be a highest tile of P (else PreconditionFailed).
WatershedResult watershed(const PathAssembly& p, const Assembly& seed);

struct OrderResult {
    bool ok = true;
    std::size_t i = 0;
    std::size_t j = 0;
};

OrderResult check_order(const PathAssembly& p, const Assembly& seed);

struct DominationReport {
    Vector v;
    std::vector<std::size_t> dominating;

    friend bool operator==(const DominationReport&, const DominationReport&) = default;
};

DominationReport dominating_tiles(const PathAssembly& p, Vector v);

GlueEdge mirror(const GlueEdge& e);
VisibilityReport mirror(const VisibilityReport& r);

}  // namespace tilepump
