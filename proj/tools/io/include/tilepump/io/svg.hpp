#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilepump/io/instance.hpp"
#include "tilepump/visibility.hpp"

namespace tilepump::io {

struct Overlays {
    std::optional<Side> visibility;  // rays of the visible glues from this side
    std::optional<Vector> dominating;
    std::vector<Point> stake;
    std::optional<std::pair<std::size_t, std::size_t>> pumping;  // (i, j)
    std::size_t pumping_iterations = 2;
    std::optional<Point> conflict;
};

// y grows upward in the drawing. Overlay elements carry the classes ray,
// dominating-ray, stake, ghost and conflict.
std::string render_svg(const Instance& inst, const Overlays& overlays = {});

}  // namespace tilepump::io
