#include "tilepump/model/tiles.hpp"

#include <utility>

#include "tilepump/model/errors.hpp"

namespace tilepump {

bool binds(const Glue& a, const Glue& b)
{
    return a.active() && b.active() && a.label == b.label;
}

TileType make_tile(std::string name, Glue north, Glue east, Glue south, Glue west)
{
    return TileType{std::move(name), {std::move(north), std::move(east), std::move(south), std::move(west)}};
}

bool interacts(const TileType& t1, Dir side, const TileType& t2)
{
    return binds(t1.glue(side), t2.glue(opposite(side)));
}

TileType mirror(const TileType& t)
{
    TileType m = t;
    std::swap(m.glue(Dir::East), m.glue(Dir::West));
    return m;
}

TileSet::TileSet(std::vector<TileType> types) : types_(std::move(types))
{
    for (std::size_t i = 0; i < types_.size(); ++i) {
        if (types_[i].name.empty())
            throw Error(ErrorCode::InvalidAssembly, "tile type without a name");
        if (!by_name_.emplace(types_[i].name, static_cast<TileId>(i)).second)
            throw Error(ErrorCode::InvalidAssembly, "duplicate tile name '" + types_[i].name + "'");
    }
    const std::size_t n = types_.size();
    table_.assign(n * 4 * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (Dir d : kDirs)
            for (std::size_t b = 0; b < n; ++b)
                table_[(a * 4 + static_cast<std::size_t>(d)) * n + b] =
                    tilepump::interacts(types_[a], d, types_[b]);
}

std::optional<TileId> TileSet::find(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

TileId TileSet::id_of(std::string_view name) const
{
    if (auto id = find(name))
        return *id;
    throw Error(ErrorCode::UnknownTile, "unknown tile '" + std::string(name) + "'");
}

TileSet mirror(const TileSet& tiles)
{
    std::vector<TileType> out;
    out.reserve(tiles.size());
    for (const auto& t : tiles.types())
        out.push_back(mirror(t));
    return TileSet(std::move(out));
}

}  // namespace tilepump
