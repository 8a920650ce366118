#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tilepump/movies/movie.hpp"

namespace tilepump {

struct DietConfig {
    Coord f = 0;  // horizontal margin around the seed
    Coord h = 0;  // vertical margin around the seed
};

struct DietResult {
    enum class Kind { Escape, RepeatFound, Exhausted };
    Kind kind = Kind::Exhausted;
    Dir side = Dir::North;
    std::size_t index = 0;  // first tile of P outside the box
    Box region;
    std::optional<Window> w1;
    std::optional<Window> w2;
    Vector v;
};

std::string to_string(DietResult::Kind k);

// Follows P until it leaves the seed box grown by (f, h). An east or west exit
// is followed by a scan for two vertical windows with equal movies.
DietResult diet_check(const TileAssemblySystem& tas, const PathAssembly& p, DietConfig config);

}  // namespace tilepump
