#include "tilepump/visibility.hpp"

#include <algorithm>

#include "tilepump/model/errors.hpp"

namespace tilepump {

namespace {

std::optional<GlueEdge> vertical_edge(std::size_t index, Point from, Point to)
{
    if (from.x != to.x || (to.y - from.y != 1 && from.y - to.y != 1))
        return std::nullopt;
    const bool north = to.y > from.y;
    return GlueEdge{index, std::min(from.y, to.y), from.x, north ? GlueKind::NorthOutput : GlueKind::SouthOutput};
}

}  // namespace

std::vector<GlueEdge> glue_edges(const PathAssembly& p, std::size_t upto)
{
    std::vector<GlueEdge> out;
    const std::size_t n = std::min(upto, p.size());
    for (std::size_t i = 1; i < n; ++i)
        if (auto e = vertical_edge(i, p.pos(i), p.pos(i + 1)))
            out.push_back(*e);
    return out;
}

std::vector<GlueEdge> glue_edges(const TileAssemblySystem& tas, const PathAssembly& p, bool include_seed_junction)
{
    std::vector<GlueEdge> out;
    if (include_seed_junction && !p.empty())
        if (auto d = seed_attachment(tas, p); d && (*d == Dir::North || *d == Dir::South))
            out.push_back(*vertical_edge(0, p.pos(1) + unit(*d), p.pos(1)));
    auto rest = glue_edges(p);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

VisibilityIndex::VisibilityIndex(const Assembly& seed, const PathAssembly& p, std::size_t upto)
{
    for (const auto& [pt, t] : seed.raw())
        if (seed.contains(pt + Vector{0, 1}))
            add_path_edge(pt.y, pt.x);
    for (const auto& e : glue_edges(p, upto))
        add_path_edge(e.level, e.x);
}

void VisibilityIndex::add_path_edge(Coord level, Coord x)
{
    auto [it, inserted] = extremes_.emplace(level, std::pair{x, x});
    if (!inserted) {
        it->second.first = std::min(it->second.first, x);
        it->second.second = std::max(it->second.second, x);
    }
}

bool VisibilityIndex::visible(Coord level, Coord x, Side side) const
{
    auto it = extremes_.find(level);
    if (it == extremes_.end())
        return true;
    return side == Side::East ? it->second.second <= x : it->second.first >= x;
}

VisibilityReport visible_glues(const PathAssembly& p, const Assembly& seed, Side side)
{
    VisibilityIndex index(seed, p);
    VisibilityReport r;
    r.side = side;
    for (const auto& e : glue_edges(p))
        if (index.visible(e.level, e.x, side)) {
            r.visible.push_back(e);
            r.rays.push_back({e.level, e.x, side});
        }
    return r;
}

namespace {

void require_last_highest(const PathAssembly& p)
{
    if (p.empty())
        throw Error(ErrorCode::PreconditionFailed, "empty path");
    const Coord top = p.bounds().max_y;
    if (p.pos(p.size()).y != top)
        throw Error(ErrorCode::PreconditionFailed, "last tile of P is not a highest tile");
}

}  // namespace

WatershedResult watershed(const PathAssembly& p, const Assembly& seed)
{
    require_last_highest(p);
    const auto r = visible_glues(p, seed, Side::East);
    std::optional<GlueEdge> lowest_north, highest_south;
    for (const auto& e : r.visible) {
        if (e.kind == GlueKind::NorthOutput) {
            if (!lowest_north || e.level < lowest_north->level)
                lowest_north = e;
        } else if (!highest_south || e.level > highest_south->level) {
            highest_south = e;
        }
    }
    WatershedResult out;
    if (lowest_north && highest_south && highest_south->level >= lowest_north->level) {
        out.split = false;
        out.evidence = std::pair{*lowest_north, *highest_south};
        return out;
    }
    // Without south glues every level works; report the lowest row in play.
    out.y0 = highest_south ? highest_south->level + 1 : std::min(seed.bounds().min_y, p.bounds().min_y);
    return out;
}

OrderResult check_order(const PathAssembly& p, const Assembly& seed)
{
    require_last_highest(p);
    auto visible = visible_glues(p, seed, Side::East).visible;
    std::sort(visible.begin(), visible.end(), [](const GlueEdge& a, const GlueEdge& b) { return a.level < b.level; });
    std::optional<GlueEdge> prev_north, prev_south;
    for (const auto& e : visible) {
        auto& prev = e.kind == GlueKind::NorthOutput ? prev_north : prev_south;
        if (prev) {
            const bool ok = e.kind == GlueKind::NorthOutput ? prev->index < e.index : prev->index > e.index;
            if (!ok)
                return {false, prev->index, e.index};
        }
        prev = e;
    }
    return {};
}

DominationReport dominating_tiles(const PathAssembly& p, Vector v)
{
    if (v.is_zero())
        throw Error(ErrorCode::InvalidVector, "domination vector must be non-zero");
    const Box box = p.bounds();
    DominationReport r{v, {}};
    for (std::size_t i = 1; i <= p.size(); ++i) {
        bool dominated = false;
        for (Point q = p.pos(i) + v; box.contains(q); q += v)
            if (p.index_of(q)) {
                dominated = true;
                break;
            }
        if (!dominated)
            r.dominating.push_back(i);
    }
    return r;
}

GlueEdge mirror(const GlueEdge& e)
{
    return {e.index, e.level, -e.x, e.kind};
}

VisibilityReport mirror(const VisibilityReport& r)
{
    VisibilityReport m;
    m.side = other(r.side);
    for (const auto& e : r.visible)
        m.visible.push_back(mirror(e));
    for (const auto& ray : r.rays)
        m.rays.push_back({ray.level, -ray.x, other(ray.toward)});
    return m;
}

}  // namespace tilepump
