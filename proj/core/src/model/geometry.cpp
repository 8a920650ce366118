#include "tilepump/model/geometry.hpp"

#include <algorithm>
#include <limits>

#include "tilepump/model/errors.hpp"

namespace tilepump {

std::string_view to_string(Dir d)
{
    switch (d) {
    case Dir::North: return "N";
    case Dir::East: return "E";
    case Dir::South: return "S";
    case Dir::West: return "W";
    }
    return "?";
}

std::optional<Dir> step_dir(Point from, Point to)
{
    const Vector d = to - from;
    for (Dir dir : kDirs)
        if (unit(dir) == d)
            return dir;
    return std::nullopt;
}

LineSide line_side(Point a, Vector v, Point x)
{
    if (v.is_zero())
        throw Error(ErrorCode::InvalidVector, "line direction must be non-zero");
    return det(v, x - a) >= 0 ? LineSide::NonNegative : LineSide::Negative;
}

Box Box::expanded(Coord margin) const
{
    if (empty())
        return *this;
    return {min_x - margin, min_y - margin, max_x + margin, max_y + margin};
}

Box Box::including(Point p) const
{
    if (empty())
        return {p.x, p.y, p.x, p.y};
    return {std::min(min_x, p.x), std::min(min_y, p.y), std::max(max_x, p.x), std::max(max_y, p.y)};
}

Box Box::united(const Box& o) const
{
    if (empty())
        return o;
    if (o.empty())
        return *this;
    return {std::min(min_x, o.min_x), std::min(min_y, o.min_y), std::max(max_x, o.max_x),
            std::max(max_y, o.max_y)};
}

Box Box::around(std::span<const Point> points)
{
    Box b;
    for (Point p : points)
        b = b.including(p);
    return b;
}

Coord manhattan_diameter(std::span<const Point> points)
{
    if (points.empty())
        return 0;
    Coord lo_s = std::numeric_limits<Coord>::max(), hi_s = std::numeric_limits<Coord>::min();
    Coord lo_d = lo_s, hi_d = hi_s;
    for (Point p : points) {
        lo_s = std::min(lo_s, p.x + p.y);
        hi_s = std::max(hi_s, p.x + p.y);
        lo_d = std::min(lo_d, p.x - p.y);
        hi_d = std::max(hi_d, p.x - p.y);
    }
    return std::max(hi_s - lo_s, hi_d - lo_d);
}

}  // namespace tilepump
