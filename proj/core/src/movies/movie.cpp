#include "tilepump/movies/movie.hpp"

#include <algorithm>

#include "tilepump/model/errors.hpp"

namespace tilepump {

Window Window::vertical(Coord x, Box clip)
{
    Window w;
    w.kind = Kind::VerticalLine;
    w.x = x;
    w.clip = clip;
    return w;
}

Window Window::periodic(PeriodicSeparator s, Box clip)
{
    if (s.base.empty() || s.v.is_zero())
        throw Error(ErrorCode::PreconditionFailed, "periodic separator needs a base path and a non-zero vector");
    Window w;
    w.kind = Kind::Periodic;
    w.separator = std::move(s);
    w.clip = clip;
    return w;
}

Window Window::translated(Vector v) const
{
    Window w = *this;
    if (kind == Kind::VerticalLine)
        w.x += v.x;
    else
        w.separator.offset += v;
    w.clip = {clip.min_x + v.x, clip.min_y + v.y, clip.max_x + v.x, clip.max_y + v.y};
    w.clip = w.clip.united(clip);
    return w;
}

std::vector<Point> Window::cells() const
{
    std::vector<Point> out;
    if (kind != Kind::Periodic || clip.empty())
        return out;
    const auto& s = separator;
    const Coord reach = clip.width() + clip.height() + 2;
    const Coord period_extent = std::max<Coord>(1, norm_inf(s.v));
    const Coord lo = -(reach / period_extent) - 2;
    const Coord hi = reach / period_extent + 2;
    // Translate so that the clip is centred on the range of periods scanned.
    const Point anchor = s.base.front() + s.offset;
    const Point centre{(clip.min_x + clip.max_x) / 2, (clip.min_y + clip.max_y) / 2};
    const Vector gap = centre - anchor;
    const Coord shift = s.v.y != 0 ? gap.y / s.v.y : gap.x / s.v.x;
    for (Coord k = lo + shift; k <= hi + shift; ++k)
        for (Point b : s.base) {
            const Point c = b + k * s.v + s.offset;
            if (clip.contains(c))
                out.push_back(c);
        }
    return out;
}

bool Window::contains_cell(Point p) const
{
    if (kind != Kind::Periodic)
        return false;
    const auto cs = cells();
    return std::find(cs.begin(), cs.end(), p) != cs.end();
}

Movie record_movie(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t k, const Window& w)
{
    const std::size_t n = std::min(k, p.size());
    const Box need = tas.seed().bounds().united(p.prefix(n).bounds());
    if (!w.clip.contains(need))
        throw Error(ErrorCode::WindowClipError, "window clip does not cover the recorded assembly");

    const TileSet& tiles = tas.tiles();
    Movie m;
    if (w.kind == Window::Kind::VerticalLine) {
        Assembly grown = tas.seed();
        for (std::size_t idx = 1; idx <= n; ++idx) {
            const Placement& t = p.step(idx);
            for (Dir d : {Dir::East, Dir::West}) {
                const Point q = t.pos + unit(d);
                const bool across = (d == Dir::East && t.pos.x == w.x) || (d == Dir::West && t.pos.x == w.x + 1);
                if (!across)
                    continue;
                auto o = grown.at(q);
                if (!o || !tiles.interacts(t.tile, d, *o))
                    continue;
                const Point west = d == Dir::East ? t.pos : q;
                m.events.push_back({west, tiles[t.tile].glue(d).label, opposite(d)});
                m.placed_by.push_back(idx);
            }
            grown.place(t.pos, t.tile);
        }
        return m;
    }

    const auto cells = w.cells();
    std::vector<Point> sorted(cells);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t idx = 1; idx <= n; ++idx) {
        const Placement& t = p.step(idx);
        if (!std::binary_search(sorted.begin(), sorted.end(), t.pos))
            continue;
        Dir d = Dir::North;
        if (idx > 1)
            d = *step_dir(p.pos(idx - 1), t.pos);
        else if (auto s = seed_attachment(tas, p))
            d = opposite(*s);
        m.events.push_back({t.pos, tiles[t.tile].name, d});
        m.placed_by.push_back(idx);
    }
    return m;
}

bool movies_equal_upto(const Movie& m1, const Movie& m2, Vector v)
{
    if (m1.events.size() != m2.events.size())
        return false;
    for (std::size_t e = 0; e < m1.events.size(); ++e) {
        const auto& a = m1.events[e];
        const auto& b = m2.events[e];
        if (a.anchor + v != b.anchor || a.label != b.label || a.direction != b.direction)
            return false;
    }
    return true;
}

}  // namespace tilepump
