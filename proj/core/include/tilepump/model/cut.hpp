#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "tilepump/model/geometry.hpp"

namespace tilepump {

// Removes every edge incident to the listed vertices.
struct VertexPathGenerator {
    std::vector<Point> vertices;
};

// Horizontal dual ray starting on the edge between `cell` and `cell + (0,1)`,
// running toward `toward` (East or West) and clipped to the window. Vertical
// rays start on the edge between `cell` and `cell + (1,0)`.
struct DualRayGenerator {
    Point cell;
    Dir toward = Dir::East;
};

// The line through A with direction v; cells on opposite sides are separated.
struct LineGenerator {
    Point a;
    Vector v;
};

using CutGenerator = std::variant<VertexPathGenerator, DualRayGenerator, LineGenerator>;

class Cut {
public:
    const Box& window() const { return window_; }
    std::size_t component_count() const { return components_.size(); }
    const std::vector<Point>& component(std::size_t c) const { return components_[c]; }
    std::size_t infinite_component() const { return infinite_; }
    bool touches_border(std::size_t c) const { return border_[c]; }

    // Throws OutsideWindow for points outside the window.
    std::size_t component_of(Point p) const;
    bool same_component(Point a, Point b) const { return component_of(a) == component_of(b); }

private:
    friend Cut region_cut(const std::vector<CutGenerator>&, Coord);
    Box window_;
    std::vector<std::vector<Point>> components_;
    std::vector<bool> border_;
    std::vector<std::size_t> label_;  // row-major over window
    std::size_t infinite_ = 0;
};

// Window = bounding box of generator anchors expanded by margin (>= 2).
Cut region_cut(const std::vector<CutGenerator>& generators, Coord window_margin = 2);

}  // namespace tilepump
