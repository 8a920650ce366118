#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tilepump/model/errors.hpp"
#include "tilepump/model/path.hpp"

namespace tilepump {

struct FragilityLimits {
    Coord window_margin = 3;
    std::size_t max_assemblies = 100000;
    Deadline deadline;
};

struct FragilityWitness {
    std::vector<Placement> growth_order;  // replays from the seed
    Point conflict_point;
};

// Breadth-first search, by length, over simple tile paths grown from the seed
// inside bounds(seed + P) expanded by the margin. Any producible assembly that
// conflicts with P contains such a path reaching the conflict, so the search
// is complete for the window. Exceeding max_assemblies throws
// SearchBudgetExhausted; exhausting the window returns nullopt.
std::optional<FragilityWitness> fragility_witness(const TileAssemblySystem& tas, const PathAssembly& p,
                                                  const FragilityLimits& limits = {});

}  // namespace tilepump
