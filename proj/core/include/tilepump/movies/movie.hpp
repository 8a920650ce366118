#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilepump/model/path.hpp"

namespace tilepump {

// Periodic separator: cells C_k = base[k mod |base|] + floor(k/|base|) * v + offset.
// `base` runs from P_n up to, but excluding, P_n + v.
struct PeriodicSeparator {
    std::vector<Point> base;
    Vector v;
    Vector offset;

    friend bool operator==(const PeriodicSeparator&, const PeriodicSeparator&) = default;
};

struct Window {
    enum class Kind { VerticalLine, Periodic };
    Kind kind = Kind::VerticalLine;
    Coord x = 0;  // VerticalLine: the dual line between columns x and x+1
    PeriodicSeparator separator;
    Box clip;

    static Window vertical(Coord x, Box clip);
    static Window periodic(PeriodicSeparator s, Box clip);

    Window translated(Vector v) const;
    // Cells of a periodic separator inside the clip.
    std::vector<Point> cells() const;
    bool contains_cell(Point p) const;

    friend bool operator==(const Window&, const Window&) = default;
};

// A vertical-line event is a bond formed across the line; `anchor` is its
// west cell and `direction` points from the tile already present to the tile
// being placed. A periodic-separator event is a tile of P placed on one of its
// cells; `anchor` is that cell and `direction` the step that reached it.
struct MovieEvent {
    Point anchor;
    std::string label;
    Dir direction = Dir::East;

    friend bool operator==(const MovieEvent&, const MovieEvent&) = default;
};

struct Movie {
    std::vector<MovieEvent> events;
    std::vector<std::size_t> placed_by;  // P index whose placement produced each event

    bool empty() const { return events.empty(); }
};

// Movie of seed + P_[1,k] along w, in growth order. The clip must cover the
// bounding box of seed + P_[1,k] (else WindowClipError).
Movie record_movie(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t k, const Window& w);
inline Movie record_movie(const TileAssemblySystem& tas, const PathAssembly& p, const Window& w)
{
    return record_movie(tas, p, p.size(), w);
}

bool movies_equal_upto(const Movie& m1, const Movie& m2, Vector v);

}  // namespace tilepump
