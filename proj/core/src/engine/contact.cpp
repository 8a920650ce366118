#include "tilepump/engine/contact.hpp"

namespace tilepump {

namespace {

int angle(Dir d)
{
    switch (d) {
    case Dir::East: return 0;
    case Dir::North: return 2;
    case Dir::West: return 4;
    case Dir::South: return 6;
    }
    return 0;
}

int mod8(int a)
{
    return ((a % 8) + 8) % 8;
}

}  // namespace

PathSides::PathSides(const PathAssembly& p) : in_(p.size() + 1, -1), out_(p.size() + 1, -1)
{
    for (std::size_t n = 1; n <= p.size(); ++n) {
        if (n > 1)
            in_[n] = angle(*step_dir(p.pos(n), p.pos(n - 1)));
        if (n < p.size())
            out_[n] = angle(*step_dir(p.pos(n), p.pos(n + 1)));
    }
}

LocalSide PathSides::side(std::size_t n, Dir d) const
{
    const int a = angle(d);
    if (a == in_[n] || a == out_[n])
        return LocalSide::Along;
    if (in_[n] < 0 || out_[n] < 0)
        return LocalSide::Free;
    return mod8(a - out_[n]) < mod8(in_[n] - out_[n]) ? LocalSide::Left : LocalSide::Right;
}

ContactResult classify_contact(std::span<const Point> q, const PathAssembly& p)
{
    return classify_contact(q, p, PathSides(p));
}

ContactResult classify_contact(std::span<const Point> q, const PathAssembly& p, const PathSides& sides)
{
    ContactResult result;
    std::size_t t = 0;
    while (t < q.size()) {
        auto start = p.index_of(q[t]);
        if (!start) {
            ++t;
            continue;
        }
        result.kind = ContactKind::TouchesSameSide;
        std::size_t end = t;
        std::size_t n_end = *start;
        while (end + 1 < q.size()) {
            auto next = p.index_of(q[end + 1]);
            if (!next || (*next != n_end + 1 && *next + 1 != n_end))
                break;
            ++end;
            n_end = *next;
        }
        if (t > 0 && end + 1 < q.size()) {
            auto side_towards = [&](std::size_t n, Point from, Point to) {
                auto d = step_dir(from, to);
                return d ? sides.side(n, *d) : LocalSide::Free;
            };
            const LocalSide entry = side_towards(*start, q[t], q[t - 1]);
            const LocalSide exit = side_towards(n_end, q[end], q[end + 1]);
            const bool opposite = (entry == LocalSide::Left && exit == LocalSide::Right) ||
                                  (entry == LocalSide::Right && exit == LocalSide::Left);
            if (opposite)
                return {ContactKind::Crosses, q[end]};
        }
        t = end + 1;
    }
    return result;
}

}  // namespace tilepump
