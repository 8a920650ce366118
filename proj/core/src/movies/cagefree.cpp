#include "tilepump/movies/cagefree.hpp"

#include <algorithm>
#include <set>

#include "tilepump/model/errors.hpp"

namespace tilepump {

std::vector<Point> separator_base(Point from, Vector v)
{
    std::vector<Point> out;
    Point at = from;
    const Vector up{0, v.y > 0 ? 1 : -1};
    const Vector side{v.x > 0 ? 1 : -1, 0};
    for (Coord s = 0; s < abs_coord(v.y); ++s) {
        out.push_back(at);
        at += up;
    }
    for (Coord s = 0; s < abs_coord(v.x); ++s) {
        out.push_back(at);
        at += side;
    }
    return out;
}

std::vector<Window> cagefree_separators(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t n,
                                        Vector v)
{
    if (v.y <= 0)
        throw Error(ErrorCode::PreconditionFailed, "separator vector must point north");
    if (n < 1 || n > p.size())
        throw Error(ErrorCode::InvalidIndex, "suffix index out of range");
    for (std::size_t k = n; k + 1 <= p.size(); ++k)
        if (p.index_of(p.pos(k) + v))
            throw Error(ErrorCode::PreconditionFailed, "translated suffix meets the path", k);

    std::set<Coord> blocked;
    for (Point s : tas.seed().positions())
        blocked.insert(s.y);
    for (std::size_t k = 1; k < n; ++k)
        blocked.insert(p.pos(k).y);

    const std::vector<Point> base = separator_base(p.pos(n), v);
    const Box clip = tas.seed().bounds().united(p.bounds()).expanded(1);
    const Coord y0 = p.pos(n).y;
    Coord top = y0;
    for (std::size_t k = n; k <= p.size(); ++k)
        top = std::max(top, p.pos(k).y);

    std::vector<Window> out;
    for (Coord lo = y0; lo <= top; lo += v.y) {
        const Coord hi = lo + v.y - 1;
        auto touched = blocked.lower_bound(lo);
        if (touched != blocked.end() && *touched <= hi)
            continue;
        for (std::size_t k = n; k <= p.size(); ++k) {
            const Coord y = p.pos(k).y;
            if (y < lo || y > hi)
                continue;
            out.push_back(Window::periodic({base, v, p.pos(k) - p.pos(n)}, clip));
            break;
        }
    }
    return out;
}

}  // namespace tilepump
