#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tilepump/model/path.hpp"
#include "tilepump/visibility.hpp"

namespace tilepump {

struct UTurn {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    friend bool operator==(const UTurn&, const UTurn&) = default;
};

// `hand` is the side the north glues of P_i and P_j are visible from; the
// south side of P_k must then be visible from the other side on seed + P_[1,k].
// Returns the lexicographically least triple.
std::optional<UTurn> detect_nice_uturn(const TileAssemblySystem& tas, const PathAssembly& p,
                                       Side hand = Side::West);

struct InitialPair {
    enum class Kind { Pair, UTurnFound, TooShort };
    Kind kind = Kind::TooShort;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    std::string reason;
};

inline Coord default_height_budget(const TileAssemblySystem& tas)
{
    return 2 * static_cast<Coord>(tas.tiles().size()) + 2;
}

InitialPair find_initial_pair(const TileAssemblySystem& tas, const PathAssembly& p, Coord height_budget,
                              Side hand = Side::West);

}  // namespace tilepump
