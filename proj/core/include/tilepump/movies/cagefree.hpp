#pragma once

#include <cstddef>
#include <vector>

#include "tilepump/movies/movie.hpp"

namespace tilepump {

// One periodic separator per stripe of v.y rows above P_n, each through the
// first tile of P_[n,|P|] in its stripe. Stripes touching the rows of
// seed + P_[1,n-1] are skipped.
// Throws PreconditionFailed if v.y <= 0 or P_[n,|P|-1] + v meets P.
std::vector<Window> cagefree_separators(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t n,
                                        Vector v);

// Shortest grid path from `from` to `from + v`, vertical steps first, without its last point.
std::vector<Point> separator_base(Point from, Vector v);

}  // namespace tilepump
