#include "tilepump/model/cut.hpp"

#include <deque>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "tilepump/model/errors.hpp"

namespace tilepump {

namespace {

struct EdgeKey {
    Point a;
    Point b;
    friend bool operator<(const EdgeKey& l, const EdgeKey& r)
    {
        return std::pair{l.a, l.b} < std::pair{r.a, r.b};
    }
};

EdgeKey edge(Point p, Point q)
{
    return p < q ? EdgeKey{p, q} : EdgeKey{q, p};
}

}  // namespace

std::size_t Cut::component_of(Point p) const
{
    if (!window_.contains(p))
        throw Error(ErrorCode::OutsideWindow,
                    "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ") lies outside the cut window");
    const auto idx = static_cast<std::size_t>((p.y - window_.min_y) * window_.width() + (p.x - window_.min_x));
    return label_[idx];
}

Cut region_cut(const std::vector<CutGenerator>& generators, Coord window_margin)
{
    if (generators.empty())
        throw Error(ErrorCode::InvalidCut, "no generators");
    if (window_margin < 2)
        throw Error(ErrorCode::InvalidCut, "window margin must be at least 2");

    Box anchors;
    for (const auto& g : generators) {
        if (auto* vp = std::get_if<VertexPathGenerator>(&g)) {
            if (vp->vertices.empty())
                throw Error(ErrorCode::InvalidCut, "empty vertex path");
            for (Point p : vp->vertices)
                anchors = anchors.including(p);
        } else if (auto* r = std::get_if<DualRayGenerator>(&g)) {
            anchors = anchors.including(r->cell);
        } else {
            const auto& l = std::get<LineGenerator>(g);
            if (l.v.is_zero())
                throw Error(ErrorCode::InvalidVector, "line direction must be non-zero");
            anchors = anchors.including(l.a);
        }
    }

    Cut cut;
    cut.window_ = anchors.expanded(window_margin);
    const Box& w = cut.window_;

    std::unordered_set<Point, PointHash> isolated;
    std::set<EdgeKey> removed;
    for (const auto& g : generators) {
        if (auto* vp = std::get_if<VertexPathGenerator>(&g)) {
            isolated.insert(vp->vertices.begin(), vp->vertices.end());
        } else if (auto* r = std::get_if<DualRayGenerator>(&g)) {
            const Vector along = unit(r->toward);
            const bool horizontal = r->toward == Dir::East || r->toward == Dir::West;
            const Vector across = horizontal ? Vector{0, 1} : Vector{1, 0};
            for (Point p = r->cell; w.contains(p) || w.contains(p + across); p += along)
                removed.insert(edge(p, p + across));
        }
    }

    auto blocked = [&](Point p, Point q) {
        if (isolated.count(p) || isolated.count(q))
            return true;
        if (removed.count(edge(p, q)))
            return true;
        for (const auto& g : generators)
            if (auto* l = std::get_if<LineGenerator>(&g))
                if (line_side(l->a, l->v, p) != line_side(l->a, l->v, q))
                    return true;
        return false;
    };

    const auto width = static_cast<std::size_t>(w.width());
    const auto height = static_cast<std::size_t>(w.height());
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    cut.label_.assign(width * height, unset);
    auto index = [&](Point p) {
        return static_cast<std::size_t>((p.y - w.min_y) * w.width() + (p.x - w.min_x));
    };
    auto on_border = [&](Point p) {
        return p.x == w.min_x || p.x == w.max_x || p.y == w.min_y || p.y == w.max_y;
    };

    std::optional<std::size_t> infinite;
    for (Coord y = w.min_y; y <= w.max_y; ++y) {
        for (Coord x = w.min_x; x <= w.max_x; ++x) {
            const Point start{x, y};
            if (cut.label_[index(start)] != unset)
                continue;
            const std::size_t c = cut.components_.size();
            cut.components_.emplace_back();
            cut.border_.push_back(false);
            std::deque<Point> queue{start};
            cut.label_[index(start)] = c;
            while (!queue.empty()) {
                Point p = queue.front();
                queue.pop_front();
                cut.components_[c].push_back(p);
                if (on_border(p))
                    cut.border_[c] = true;
                for (Dir d : kDirs) {
                    Point q = p + unit(d);
                    if (!w.contains(q) || cut.label_[index(q)] != unset || blocked(p, q))
                        continue;
                    cut.label_[index(q)] = c;
                    queue.push_back(q);
                }
            }
            if (!infinite && cut.border_[c] && !isolated.count(start))
                infinite = c;
        }
    }
    cut.infinite_ = infinite.value_or(0);
    return cut;
}

}  // namespace tilepump
