#include "tilepump/movies/diet.hpp"

#include "tilepump/model/errors.hpp"

namespace tilepump {

std::string to_string(DietResult::Kind k)
{
    switch (k) {
    case DietResult::Kind::Escape: return "escape";
    case DietResult::Kind::RepeatFound: return "repeat-found";
    case DietResult::Kind::Exhausted: return "exhausted";
    }
    return "?";
}

DietResult diet_check(const TileAssemblySystem& tas, const PathAssembly& p, DietConfig config)
{
    if (config.f < 0 || config.h < 0)
        throw Error(ErrorCode::PreconditionFailed, "diet margins must be non-negative");
    const Box seed = tas.seed().bounds();
    DietResult res;
    res.region = {seed.min_x - config.f, seed.min_y - config.h, seed.max_x + config.f, seed.max_y + config.h};

    for (std::size_t k = 1; k <= p.size(); ++k) {
        const Point q = p.pos(k);
        if (res.region.contains(q))
            continue;
        res.kind = DietResult::Kind::Escape;
        res.index = k;
        if (q.x > res.region.max_x)
            res.side = Dir::East;
        else if (q.x < res.region.min_x)
            res.side = Dir::West;
        else
            res.side = q.y > res.region.max_y ? Dir::North : Dir::South;
        break;
    }
    if (res.index == 0)
        return res;
    if (res.side != Dir::East && res.side != Dir::West)
        return res;

    const Box clip = seed.united(p.prefix(res.index).bounds());
    const bool east = res.side == Dir::East;
    // Lines x strictly separate the seed from the exit tile.
    const Coord lo = east ? seed.max_x : p.pos(res.index).x;
    const Coord hi = east ? p.pos(res.index).x - 1 : seed.min_x - 1;
    std::vector<std::pair<Coord, Movie>> movies;
    for (Coord x = lo; x <= hi; ++x)
        movies.emplace_back(x, record_movie(tas, p, res.index, Window::vertical(x, clip)));

    // Pairs ordered by the later window first reached by P.
    const std::size_t n = movies.size();
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t second = east ? step : n - 1 - step;
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t first = east ? t : n - 1 - t;
            if (first == second || (east ? first > second : first < second))
                continue;
            const Movie& a = movies[first].second;
            const Movie& b = movies[second].second;
            if (a.empty() || b.empty())
                continue;
            const Vector v = b.events.front().anchor - a.events.front().anchor;
            if (v.x == 0 || !movies_equal_upto(a, b, v))
                continue;
            res.kind = DietResult::Kind::RepeatFound;
            res.w1 = Window::vertical(movies[first].first, clip);
            res.w2 = Window::vertical(movies[second].first, clip);
            res.v = v;
            return res;
        }
    }
    return res;
}

}  // namespace tilepump
