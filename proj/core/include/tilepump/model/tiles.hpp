#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tilepump/model/geometry.hpp"

namespace tilepump {

struct Glue {
    std::string label;
    int strength = 0;

    friend bool operator==(const Glue&, const Glue&) = default;

    // Strength 0 is inert whatever the label.
    bool active() const { return strength >= 1; }
};

bool binds(const Glue& a, const Glue& b);

struct TileType {
    std::string name;
    std::array<Glue, 4> glues;  // indexed by Dir

    friend bool operator==(const TileType&, const TileType&) = default;

    const Glue& glue(Dir d) const { return glues[static_cast<std::size_t>(d)]; }
    Glue& glue(Dir d) { return glues[static_cast<std::size_t>(d)]; }
};

TileType make_tile(std::string name, Glue north, Glue east, Glue south, Glue west);

// True when t1's glue on `side` binds t2's opposite glue.
bool interacts(const TileType& t1, Dir side, const TileType& t2);

// Swaps east and west glues.
TileType mirror(const TileType& t);

using TileId = std::uint32_t;

class TileSet {
public:
    TileSet() = default;
    explicit TileSet(std::vector<TileType> types);

    std::size_t size() const { return types_.size(); }
    const TileType& operator[](TileId id) const { return types_[id]; }
    const std::vector<TileType>& types() const { return types_; }

    std::optional<TileId> find(std::string_view name) const;
    TileId id_of(std::string_view name) const;  // throws UnknownTile
    const std::string& name(TileId id) const { return types_[id].name; }

    bool interacts(TileId a, Dir side, TileId b) const
    {
        return table_[(static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(side)) * types_.size() + b];
    }

    friend bool operator==(const TileSet& a, const TileSet& b) { return a.types_ == b.types_; }

private:
    std::vector<TileType> types_;
    std::unordered_map<std::string, TileId> by_name_;
    std::vector<bool> table_;
};

TileSet mirror(const TileSet& tiles);

}  // namespace tilepump
