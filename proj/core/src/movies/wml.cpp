#include "tilepump/movies/wml.hpp"

#include <algorithm>
#include <deque>

#include "tilepump/model/errors.hpp"
#include "tilepump/model/pumping.hpp"

namespace tilepump {

std::string to_string(WmlResult::Kind k)
{
    switch (k) {
    case WmlResult::Kind::Pumpable: return "pumpable";
    case WmlResult::Kind::Fragile: return "fragile";
    case WmlResult::Kind::Unresolved: return "unresolved";
    case WmlResult::Kind::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

// +1 when every seed cell is west of (or on) the line, -1 when east, 0 otherwise.
int seed_side(const Assembly& seed, Coord x)
{
    const Box b = seed.bounds();
    if (b.max_x <= x)
        return 1;
    if (b.min_x >= x + 1)
        return -1;
    return 0;
}

Movie prefix_of(const Movie& m, std::size_t k)
{
    Movie out;
    for (std::size_t e = 0; e < m.events.size() && m.placed_by[e] <= k; ++e) {
        out.events.push_back(m.events[e]);
        out.placed_by.push_back(m.placed_by[e]);
    }
    return out;
}

std::size_t last_incident(const PathAssembly& p, const Window& w, const Movie& m)
{
    const MovieEvent& e = m.events.back();
    if (w.kind == Window::Kind::Periodic)
        return m.placed_by.back();
    std::size_t best = 0;
    for (Point c : {e.anchor, e.anchor + unit(Dir::East)})
        if (auto idx = p.index_of(c); idx && *idx <= m.placed_by.back())
            best = std::max(best, *idx);
    return best;
}

std::optional<FragileCertificate> gamma_first(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t k,
                                              Coord x, Vector v, int side)
{
    // side > 0: seed west of the line, the pumped region extends east.
    auto in_a = [&](Point q) { return side > 0 ? q.x <= x : q.x >= x + 1; };
    auto in_m = [&](Point q) { return side > 0 ? (q.x > x && q.x <= x + v.x) : (q.x <= x && q.x > x + v.x); };

    std::vector<Placement> a_part;
    std::vector<Placement> m_part;
    for (std::size_t idx = 1; idx <= k; ++idx) {
        const auto& t = p.step(idx);
        if (in_a(t.pos))
            a_part.push_back(t);
        else if (in_m(t.pos))
            m_part.push_back(t);
    }
    if (m_part.empty())
        return std::nullopt;

    const Assembly full = p.induced();
    const Box reach = p.bounds().united(tas.seed().bounds());
    const Coord rounds = (reach.width() + reach.height()) / std::max<Coord>(1, norm_inf(v)) + 2;
    for (Coord n = 1; n <= rounds; ++n) {
        Assembly gamma;
        bool consistent = true;
        auto put = [&](Placement t) {
            if (auto s = tas.seed().at(t.pos)) {
                consistent = consistent && *s == t.tile;
                return;
            }
            if (auto o = gamma.at(t.pos); o && *o != t.tile)
                consistent = false;
            else
                gamma.place(t.pos, t.tile);
        };
        for (const auto& t : a_part)
            put(t);
        for (Coord r = 0; r <= n && consistent; ++r)
            for (const auto& t : m_part)
                put({t.pos + r * v, t.tile});
        if (!consistent)
            continue;
        // The last copy may hang off a copy that is not there; grow what attaches.
        Assembly grown = tas.seed();
        std::vector<Placement> order;
        const auto seed_cells = grown.positions();
        std::deque<Point> frontier(seed_cells.begin(), seed_cells.end());
        while (!frontier.empty()) {
            const Point at = frontier.front();
            frontier.pop_front();
            for (Dir d : kDirs) {
                const Point q = at + unit(d);
                auto t = gamma.at(q);
                if (!t || grown.contains(q) || !attachable(tas.tiles(), grown, q, *t))
                    continue;
                grown.place(q, *t);
                order.push_back({q, *t});
                frontier.push_back(q);
            }
        }
        Assembly placed;
        for (const auto& t : order)
            placed.place(t.pos, t.tile);
        auto clash = conflict(placed, full);
        if (!clash)
            continue;
        std::vector<Placement> trimmed;
        for (const auto& t : order) {
            trimmed.push_back(t);
            if (t.pos == *clash)
                break;
        }
        FragileCertificate cert{trimmed, *clash};
        if (verify_fragile(tas, p, cert))
            return cert;
    }
    return std::nullopt;
}

}  // namespace

WmlResult wml_pump(const TileAssemblySystem& tas, const PathAssembly& p, const Window& w, Vector v)
{
    WmlResult res;
    auto refuse = [&](const char* why) {
        res.reason = why;
        return res;
    };
    int side = 0;
    if (w.kind == Window::Kind::VerticalLine) {
        if (v.x == 0)
            return refuse("windows w and w+v share edges");
        side = seed_side(tas.seed(), w.x);
        const int side2 = seed_side(tas.seed(), w.x + v.x);
        if (side == 0 || side != side2 || (side > 0) != (v.x > 0))
            return refuse("seed is not on the near side of both windows");
    } else {
        if (v.is_zero())
            return refuse("windows w and w+v share edges");
        for (Point c : w.cells())
            if (tas.seed().contains(c) || tas.seed().contains(c + v))
                return refuse("seed meets a separator");
    }

    const Box need = tas.seed().bounds().united(p.bounds()).united(w.clip);
    Window w1 = w;
    w1.clip = need.united(Box{need.min_x + v.x, need.min_y + v.y, need.max_x + v.x, need.max_y + v.y});
    Window w2 = w1.translated(v);
    w2.clip = w1.clip;

    const Movie m1 = record_movie(tas, p, w1);
    const Movie m2 = record_movie(tas, p, w2);
    std::vector<std::size_t> cuts(m1.placed_by);
    cuts.insert(cuts.end(), m2.placed_by.begin(), m2.placed_by.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Movie a;
    Movie b;
    for (std::size_t k : cuts) {
        a = prefix_of(m1, k);
        b = prefix_of(m2, k);
        if (!a.empty() && movies_equal_upto(a, b, v)) {
            res.k = k;
            break;
        }
    }
    if (res.k == 0) {
        res.reason = "movies never agree";
        return res;
    }
    res.u = last_incident(p, w1, a);
    res.v = last_incident(p, w2, b);
    if (res.u == 0 || res.v <= res.u) {
        res.reason = "no segment between the windows";
        return res;
    }
    if (p.type(res.u) != p.type(res.v)) {
        res.reason = "end tiles differ in type";
        return res;
    }
    if (p.pos(res.v) - p.pos(res.u) != v) {
        res.reason = "end tiles are not translates";
        return res;
    }

    const PumpDecision d = decide_pumping(tas, p, res.u, res.v);
    if (d.infinite) {
        auto cert = make_pumpable_certificate(tas, p, res.u, res.v);
        if (verify_pumpable(tas, p, cert)) {
            res.kind = WmlResult::Kind::Pumpable;
            res.pumpable = cert;
            return res;
        }
        res.kind = WmlResult::Kind::Unresolved;
        res.reason = "pumpable certificate rejected";
        return res;
    }

    if (w.kind == Window::Kind::VerticalLine)
        if (auto cert = gamma_first(tas, p, res.k, w.x, v, side)) {
            res.kind = WmlResult::Kind::Fragile;
            res.fragile = std::move(cert);
            return res;
        }
    res.kind = WmlResult::Kind::Unresolved;
    res.reason = "pumping conflicts and no blocking assembly was found";
    return res;
}

}  // namespace tilepump
