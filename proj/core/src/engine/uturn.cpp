#include "tilepump/engine/uturn.hpp"

#include <algorithm>
#include <vector>

namespace tilepump {

namespace {

bool north_output(const PathAssembly& p, std::size_t i)
{
    return i < p.size() && p.pos(i + 1) == p.pos(i) + unit(Dir::North);
}

}  // namespace

std::optional<UTurn> detect_nice_uturn(const TileAssemblySystem& tas, const PathAssembly& p, Side hand)
{
    const std::size_t n = p.size();
    if (n < 3)
        return std::nullopt;

    VisibilityIndex full(tas.seed(), p);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 1; i < n; ++i)
        if (north_output(p, i) && full.visible(p.pos(i).y, p.pos(i).x, hand))
            candidates.push_back(i);
    if (candidates.size() < 2)
        return std::nullopt;

    // south_visible[k]: the south side of P_k is visible from the other side on seed + P_[1,k].
    std::vector<bool> south_visible(n + 1, false);
    VisibilityIndex prefix(tas.seed(), p, 1);
    for (std::size_t k = 2; k <= n; ++k) {
        const Point a = p.pos(k - 1), b = p.pos(k);
        if (a.x == b.x)
            prefix.add_path_edge(std::min(a.y, b.y), a.x);
        south_visible[k] = prefix.visible(b.y - 1, b.x, other(hand));
    }

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const std::size_t i = candidates[ci];
        for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj) {
            const std::size_t j = candidates[cj];
            if (p.type(i) != p.type(j))
                continue;
            const Coord drop = p.pos(j).y - p.pos(i).y;
            Coord lowest = p.pos(i).y;
            for (std::size_t m = i; m <= j; ++m)
                lowest = std::min(lowest, p.pos(m).y);
            for (std::size_t k = j + 1; k <= n; ++k) {
                lowest = std::min(lowest, p.pos(k).y);
                if (south_visible[k] && p.pos(k).y - drop <= lowest)
                    return UTurn{i, j, k};
            }
        }
    }
    return std::nullopt;
}

InitialPair find_initial_pair(const TileAssemblySystem& tas, const PathAssembly& p, Coord height_budget,
                              Side hand)
{
    InitialPair out;
    std::size_t k0 = 0;
    for (std::size_t k = 1; k <= p.size(); ++k)
        if (p.pos(k).y - tas.seed_top() > height_budget) {
            k0 = k;
            break;
        }
    if (k0 == 0) {
        out.reason = "path never rises more than " + std::to_string(height_budget) + " rows above the seed";
        return out;
    }

    VisibilityIndex prefix(tas.seed(), p, k0);
    VisibilityIndex full(tas.seed(), p);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 1; i < k0; ++i)
        if (north_output(p, i) && prefix.visible(p.pos(i).y, p.pos(i).x, hand))
            candidates.push_back(i);

    auto visible_on_p = [&](std::size_t i) { return full.visible(p.pos(i).y, p.pos(i).x, hand); };
    std::optional<std::pair<std::size_t, std::size_t>> first, first_full;
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            const std::size_t i = candidates[a], j = candidates[b];
            if (p.type(i) != p.type(j) || p.pos(i).y >= p.pos(j).y)
                continue;
            if (!first)
                first = std::pair{i, j};
            if (!first_full && visible_on_p(i) && visible_on_p(j))
                first_full = std::pair{i, j};
        }

    if (first && first == first_full) {
        out.kind = InitialPair::Kind::Pair;
        std::tie(out.i, out.j) = *first;
        return out;
    }
    if (auto u = detect_nice_uturn(tas, p, hand)) {
        out.kind = InitialPair::Kind::UTurnFound;
        out.i = u->i;
        out.j = u->j;
        out.k = u->k;
        return out;
    }
    if (first_full) {
        out.kind = InitialPair::Kind::Pair;
        std::tie(out.i, out.j) = *first_full;
        return out;
    }
    out.reason = first ? "visibility of the repeated north glues is broken later on P"
                       : "no two visible north glues of equal type below the height budget";
    return out;
}

}  // namespace tilepump
