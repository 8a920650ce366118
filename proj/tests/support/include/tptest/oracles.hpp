#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tilepump/certify.hpp"
#include "tilepump/model/path.hpp"

// Reference implementations used to cross-check the library. They deliberately
// share no code with core beyond the data types.
namespace tptest::oracle {

using namespace tilepump;

bool glues_bind(const TileType& a, Dir side, const TileType& b);

struct NaiveConflict {
    Point point;
    std::size_t index = 0;
};

// Materializes Q_i .. Q_{j + iterations*(j-i)} on top of seed + P_[1,i-1] and
// reports the first tile that disagrees with what is already there.
std::optional<NaiveConflict> naive_pumping(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i,
                                           std::size_t j, std::size_t iterations);

// The decision horizon recomputed from scratch.
std::size_t naive_horizon(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i, std::size_t j);

// Independent replay of a growth order; true iff every tile attaches.
bool replays(const TileAssemblySystem& tas, const std::vector<Placement>& order);

bool fragile_valid(const TileAssemblySystem& tas, const PathAssembly& p, const FragileCertificate& c);
bool pumpable_valid(const TileAssemblySystem& tas, const PathAssembly& p, const PumpableCertificate& c);

struct Enumeration {
    bool conflict_found = false;
    bool exhausted = false;  // hit the assembly cap
    std::size_t assemblies = 0;
};

// Breadth-first enumeration of all producible assemblies inside `window`.
Enumeration producible_conflict(const TileAssemblySystem& tas, const PathAssembly& p, Box window,
                                std::size_t max_assemblies);

// Visibility by direct ray scan over all vertical edges of seed + P.
bool visible_by_scan(const Assembly& seed, const PathAssembly& p, Coord level, Coord x, bool from_east);

}  // namespace tptest::oracle
