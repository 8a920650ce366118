#include "tilepump/io/svg.hpp"

#include <sstream>

#include "tilepump/model/pumping.hpp"

namespace tilepump::io {

namespace {

constexpr Coord kCell = 40;

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Canvas {
    Box box;
    Coord sx(Coord x) const { return (x - box.min_x) * kCell; }
    Coord sy(Coord y) const { return (box.max_y - y) * kCell; }  // top edge of row y
};

void tile_rect(std::ostringstream& out, const Canvas& c, const TileSet& tiles, const Placement& p, const char* cls,
               const char* fill)
{
    const Coord x = c.sx(p.pos.x), y = c.sy(p.pos.y);
    out << "<g class=\"" << cls << "\" data-x=\"" << p.pos.x << "\" data-y=\"" << p.pos.y << "\">";
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
        << fill << "\" stroke=\"#333\"/>";
    const TileType& t = tiles[p.tile];
    const Coord h = kCell / 2, tick = 6;
    for (Dir d : kDirs) {
        if (!t.glue(d).active())
            continue;
        Coord x1 = x + h, y1 = y + h, x2 = x1, y2 = y1;
        switch (d) {
        case Dir::North: y1 = y; y2 = y + tick; break;
        case Dir::South: y1 = y + kCell; y2 = y1 - tick; break;
        case Dir::East: x1 = x + kCell; x2 = x1 - tick; break;
        case Dir::West: x1 = x; x2 = x + tick; break;
        }
        out << "<line class=\"glue\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"#000\" stroke-width=\"3\"/>";
    }
    out << "<text x=\"" << x + h << "\" y=\"" << y + h + 4 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << escape(t.name) << "</text></g>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const Overlays& ov)
{
    const TileSet& tiles = inst.tas.tiles();
    std::vector<Placement> ghosts;
    if (ov.pumping) {
        const auto [i, j] = *ov.pumping;
        if (i >= 1 && i < j && j <= inst.path.size() && inst.path.type(i) == inst.path.type(j)) {
            PumpedSequence q(inst.path, i, j);
            const std::size_t last = q.end_of_iteration(ov.pumping_iterations);
            for (std::size_t k = j + 1; k <= last; ++k)
                ghosts.push_back(q.at(k));
        }
    }

    Box box = inst.tas.seed().bounds().united(inst.path.bounds());
    for (const auto& g : ghosts)
        box = box.including(g.pos);
    for (Point s : ov.stake)
        box = box.including(s);
    if (ov.conflict)
        box = box.including(*ov.conflict);
    box = box.expanded(1);
    const Canvas c{box};
    const Coord width = box.width() * kCell, height = box.height() * kCell;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (const auto& s : inst.tas.seed().sorted())
        tile_rect(out, c, tiles, s, "seed", "#bbbbbb");
    for (const auto& p : inst.path.steps())
        tile_rect(out, c, tiles, p, "path", "#cfe3ff");
    for (const auto& g : ghosts)
        tile_rect(out, c, tiles, g, "ghost", "#eeeeff");

    if (ov.visibility) {
        const auto report = visible_glues(inst.path, inst.tas.seed(), *ov.visibility);
        for (const auto& r : report.rays) {
            const Coord y = c.sy(r.level);  // boundary between rows level and level+1
            const Coord x = c.sx(r.x) + kCell / 2;
            const Coord end = r.toward == Side::East ? width : 0;
            out << "<line class=\"ray\" x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << end << "\" y2=\"" << y
                << "\" stroke=\"#d33\" stroke-dasharray=\"4 3\"/>\n";
        }
    }
    if (ov.dominating) {
        const auto dom = dominating_tiles(inst.path, *ov.dominating);
        const Vector v = *ov.dominating;
        const Coord reach = box.width() + box.height();
        for (std::size_t idx : dom.dominating) {
            const Point a = inst.path.pos(idx);
            const Point b = a + reach * v;
            out << "<line class=\"dominating-ray\" x1=\"" << c.sx(a.x) + kCell / 2 << "\" y1=\"" << c.sy(a.y) + kCell / 2
                << "\" x2=\"" << c.sx(b.x) + kCell / 2 << "\" y2=\"" << c.sy(b.y) + kCell / 2
                << "\" stroke=\"#393\"/>\n";
        }
    }
    if (!ov.stake.empty()) {
        out << "<polyline class=\"stake\" fill=\"none\" stroke=\"#e80\" stroke-width=\"4\" points=\"";
        for (std::size_t k = 0; k < ov.stake.size(); ++k)
            out << (k ? " " : "") << c.sx(ov.stake[k].x) + kCell / 2 << "," << c.sy(ov.stake[k].y) + kCell / 2;
        out << "\"/>\n";
    }
    if (ov.conflict)
        out << "<circle class=\"conflict\" data-x=\"" << ov.conflict->x << "\" data-y=\"" << ov.conflict->y
            << "\" cx=\"" << c.sx(ov.conflict->x) + kCell / 2 << "\" cy=\"" << c.sy(ov.conflict->y) + kCell / 2
            << "\" r=\"" << kCell / 3 << "\" fill=\"none\" stroke=\"#f00\" stroke-width=\"3\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tilepump::io
