#include "tilepump/model/fragility.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <tuple>

namespace tilepump {

namespace {

struct Node {
    Placement tile;
    std::size_t parent;  // npos for roots
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Key = std::vector<std::tuple<Coord, Coord, TileId>>;

}  // namespace

std::optional<FragilityWitness> fragility_witness(const TileAssemblySystem& tas, const PathAssembly& p,
                                                  const FragilityLimits& limits)
{
    const TileSet& tiles = tas.tiles();
    const Assembly& seed = tas.seed();
    const Box window = seed.bounds().united(p.bounds()).expanded(limits.window_margin);

    std::vector<Node> nodes;
    std::deque<std::size_t> queue;
    std::set<Key> seen;

    auto chain = [&](std::size_t n) {
        std::vector<Placement> out;
        for (; n != npos; n = nodes[n].parent)
            out.push_back(nodes[n].tile);
        std::reverse(out.begin(), out.end());
        return out;
    };
    auto key_of = [](const std::vector<Placement>& path) {
        Key k;
        k.reserve(path.size() + 1);
        for (const auto& t : path)
            k.emplace_back(t.pos.x, t.pos.y, t.tile);
        const Placement& end = path.back();
        std::sort(k.begin(), k.end());
        k.emplace_back(end.pos.x, end.pos.y, static_cast<TileId>(-1));
        return k;
    };
    auto push = [&](Placement t, std::size_t parent) -> std::optional<FragilityWitness> {
        std::vector<Placement> path = parent == npos ? std::vector<Placement>{} : chain(parent);
        path.push_back(t);
        if (auto idx = p.index_of(t.pos); idx && p.type(*idx) != t.tile)
            return FragilityWitness{std::move(path), t.pos};
        if (!seen.insert(key_of(path)).second)
            return std::nullopt;
        if (nodes.size() >= limits.max_assemblies)
            throw Error(ErrorCode::SearchBudgetExhausted,
                        "fragility search exceeded " + std::to_string(limits.max_assemblies) + " assemblies");
        nodes.push_back({t, parent});
        queue.push_back(nodes.size() - 1);
        return std::nullopt;
    };

    for (const Placement& s : seed.sorted()) {
        for (Dir d : kDirs) {
            const Point q = s.pos + unit(d);
            if (!window.contains(q) || seed.contains(q))
                continue;
            for (TileId t = 0; t < tiles.size(); ++t)
                if (tiles.interacts(t, opposite(d), s.tile))
                    if (auto w = push({q, t}, npos))
                        return w;
        }
    }

    while (!queue.empty()) {
        limits.deadline.check();
        const std::size_t n = queue.front();
        queue.pop_front();
        const std::vector<Placement> path = chain(n);
        const Placement end = path.back();
        for (Dir d : kDirs) {
            const Point q = end.pos + unit(d);
            if (!window.contains(q) || seed.contains(q))
                continue;
            if (std::any_of(path.begin(), path.end(), [&](const Placement& t) { return t.pos == q; }))
                continue;
            for (TileId t = 0; t < tiles.size(); ++t)
                if (tiles.interacts(end.tile, d, t))
                    if (auto w = push({q, t}, n))
                        return w;
        }
    }
    return std::nullopt;
}

}  // namespace tilepump
