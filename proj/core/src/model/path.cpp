#include "tilepump/model/path.hpp"

#include <string>
#include <utility>

#include "tilepump/model/errors.hpp"

namespace tilepump {

PathAssembly PathAssembly::unchecked(std::vector<Placement> steps)
{
    PathAssembly p;
    p.steps_ = std::move(steps);
    p.index_.reserve(p.steps_.size());
    for (std::size_t i = 0; i < p.steps_.size(); ++i)
        p.index_.emplace(p.steps_[i].pos, i + 1);
    return p;
}

PathAssembly PathAssembly::make(const TileAssemblySystem& tas, std::vector<Placement> steps)
{
    const TileSet& tiles = tas.tiles();
    if (steps.empty())
        throw Error(ErrorCode::InvalidPath, "path is empty");
    std::unordered_map<Point, std::size_t, PointHash> seen;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const auto& cur = steps[s];
        const std::size_t idx = s + 1;
        if (cur.tile >= tiles.size())
            throw Error(ErrorCode::UnknownTile, "step references a tile outside the tile set", idx);
        if (tas.seed().contains(cur.pos))
            throw Error(ErrorCode::InvalidPath, "step " + std::to_string(idx) + " overlaps the seed", idx);
        if (!seen.emplace(cur.pos, idx).second)
            throw Error(ErrorCode::InvalidPath, "step " + std::to_string(idx) + " repeats a position", idx);
        if (s == 0) {
            bool bound = false;
            for (Dir d : kDirs)
                if (auto n = tas.seed().at(cur.pos + unit(d)); n && tiles.interacts(cur.tile, d, *n))
                    bound = true;
            if (!bound)
                throw Error(ErrorCode::InvalidPath, "first step does not bind the seed", idx);
            continue;
        }
        auto d = step_dir(steps[s - 1].pos, cur.pos);
        if (!d)
            throw Error(ErrorCode::InvalidPath, "step " + std::to_string(idx) + " is not adjacent to its predecessor",
                        idx);
        if (!tiles.interacts(steps[s - 1].tile, *d, cur.tile))
            throw Error(ErrorCode::InvalidPath, "step " + std::to_string(idx) + " does not bind its predecessor",
                        idx);
    }
    return unchecked(std::move(steps));
}

std::optional<std::size_t> PathAssembly::index_of(Point p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

PathAssembly PathAssembly::prefix(std::size_t k) const
{
    if (k > steps_.size())
        throw Error(ErrorCode::InvalidIndex, "prefix longer than path", k);
    return unchecked(std::vector<Placement>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Assembly PathAssembly::induced(std::size_t from, std::size_t to) const
{
    Assembly a;
    for (std::size_t i = from; i <= to && i <= steps_.size(); ++i)
        a.place(pos(i), type(i));
    return a;
}

Box PathAssembly::bounds() const
{
    Box b;
    for (const auto& s : steps_)
        b = b.including(s.pos);
    return b;
}

PathAssembly mirror(const PathAssembly& p)
{
    std::vector<Placement> out;
    out.reserve(p.size());
    for (const auto& s : p.steps())
        out.push_back({mirror(s.pos), s.tile});
    return PathAssembly::unchecked(std::move(out));
}

std::optional<Dir> seed_attachment(const TileAssemblySystem& tas, const PathAssembly& p)
{
    if (p.empty())
        return std::nullopt;
    for (Dir d : kDirs)
        if (auto n = tas.seed().at(p.pos(1) + unit(d)); n && tas.tiles().interacts(p.type(1), d, *n))
            return d;
    return std::nullopt;
}

}  // namespace tilepump
