#include <random>
#include <set>

#include "doctest.h"
#include "tilepump/model/errors.hpp"
#include "tilepump/visibility.hpp"
#include "tptest/fixtures.hpp"
#include "tptest/oracles.hpp"
#include "tptest/random.hpp"

using namespace tilepump;
using tptest::fixture;

TEST_CASE("glue_edges")
{
    CHECK(glue_edges(fixture("line-e").path).empty());

    const auto col = fixture("col-n");
    auto edges = glue_edges(col.path);
    REQUIRE(edges.size() == 4);
    for (std::size_t n = 0; n < edges.size(); ++n) {
        CHECK(edges[n].index == n + 1);
        CHECK(edges[n].level == static_cast<Coord>(n + 1));
        CHECK(edges[n].x == 0);
        CHECK(edges[n].kind == GlueKind::NorthOutput);
    }
    auto with_junction = glue_edges(col.tas, col.path, true);
    REQUIRE(with_junction.size() == 5);
    CHECK(with_junction.front() == GlueEdge{0, 0, 0, GlueKind::NorthOutput});

    const auto nshape = fixture("nshape");
    std::size_t south = 0;
    for (const auto& e : glue_edges(nshape.path))
        if (e.kind == GlueKind::SouthOutput) {
            CHECK(e.x == 4);
            ++south;
        }
    CHECK(south == 7);
}

TEST_CASE("visible_glues on fixtures")
{
    const auto col = fixture("col-n");
    CHECK(visible_glues(col.path, col.tas.seed(), Side::East).visible == glue_edges(col.path));
    CHECK(visible_glues(col.path, col.tas.seed(), Side::West).visible == glue_edges(col.path));

    const auto nshape = fixture("nshape");
    // Levels 1..4 have both columns; levels -2..0 only the down-run.
    for (const auto& e : visible_glues(nshape.path, nshape.tas.seed(), Side::West).visible)
        CHECK(e.x == (e.level >= 1 ? 0 : 4));
    for (const auto& e : visible_glues(nshape.path, nshape.tas.seed(), Side::East).visible)
        CHECK(e.x == 4);
    CHECK(visible_glues(nshape.path, nshape.tas.seed(), Side::West).visible.size() == 7);
    CHECK(visible_glues(nshape.path, nshape.tas.seed(), Side::East).visible.size() == 7);
}

TEST_CASE("adjacent but non-consecutive tiles carry no glue edge")
{
    TileSet tiles({make_tile("p", {"p", 1}, {"p", 1}, {"p", 1}, {"p", 1})});
    Assembly seed;
    seed.place({0, 0}, 0);
    auto tas = TileAssemblySystem::make(tiles, seed);
    auto p = PathAssembly::make(tas, {{{0, 1}, 0}, {{1, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 0}, {{0, 3}, 0}, {{1, 3}, 0}});
    for (const auto& e : glue_edges(p))
        CHECK_FALSE((e.level == 1 && e.x == 0));
    auto west = visible_glues(p, seed, Side::West);
    REQUIRE(west.visible.size() == 2);
    CHECK(west.visible[0] == GlueEdge{2, 1, 1, GlueKind::NorthOutput});
}

TEST_CASE("seed edges obstruct")
{
    TileSet tiles({make_tile("p", {"p", 1}, {"p", 1}, {"p", 1}, {"p", 1})});
    Assembly seed;
    seed.place({0, 0}, 0);
    seed.place({1, 0}, 0);
    seed.place({1, 1}, 0);
    auto tas = TileAssemblySystem::make(tiles, seed);
    auto p = PathAssembly::make(tas, {{{0, 1}, 0}, {{-1, 1}, 0}, {{-1, 0}, 0}});
    auto east = visible_glues(p, seed, Side::East);
    CHECK(east.visible.empty());  // the seed column at x = 1 spans level 0
    auto west = visible_glues(p, seed, Side::West);
    CHECK(west.visible.size() == 1);
}

TEST_CASE("watershed and check_order")
{
    const auto col = fixture("col-n");
    auto w = watershed(col.path, col.tas.seed());
    CHECK(w.split);
    CHECK(w.y0 == 0);
    CHECK(check_order(col.path, col.tas.seed()).ok);

    const auto nshape = fixture("nshape");
    CHECK_THROWS_AS(watershed(nshape.path, nshape.tas.seed()), Error);
    CHECK_THROWS_AS(check_order(nshape.path, nshape.tas.seed()), Error);
    auto top = nshape.path.prefix(9);
    REQUIRE(top.pos(9) == Point{4, 5});
    auto wt = watershed(top, nshape.tas.seed());
    CHECK(wt.split);
    for (const auto& e : visible_glues(top, nshape.tas.seed(), Side::East).visible)
        CHECK(e.kind == GlueKind::NorthOutput);
    CHECK(check_order(top, nshape.tas.seed()).ok);

    CHECK(check_order(col.path.prefix(2), col.tas.seed()).ok);
}

TEST_CASE("dominating_tiles")
{
    const auto col = fixture("col-n");
    CHECK(dominating_tiles(col.path, {0, 1}).dominating == std::vector<std::size_t>{5});
    const auto line = fixture("line-e");
    CHECK(dominating_tiles(line.path, {0, 1}).dominating == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(dominating_tiles(line.path, {0, 0}), Error);

    const auto nshape = fixture("nshape");
    auto brute = [](const PathAssembly& p, Vector v) {
        std::vector<std::size_t> out;
        const Box b = p.bounds();
        const Coord k_max = (b.width() + b.height()) / norm_inf(v) + 1;
        for (std::size_t i = 1; i <= p.size(); ++i) {
            bool hit = false;
            for (Coord k = 1; k <= k_max; ++k)
                for (std::size_t m = 1; m <= p.size(); ++m)
                    hit = hit || p.pos(m) == p.pos(i) + k * v;
            if (!hit)
                out.push_back(i);
        }
        return out;
    };
    CHECK(dominating_tiles(nshape.path, {0, 3}).dominating == brute(nshape.path, {0, 3}));
    std::mt19937_64 rng(3);
    for (int n = 0; n < 100; ++n) {
        auto inst = tptest::draw_instance(rng);
        const Vector v{static_cast<Coord>(rng() % 5) - 2, static_cast<Coord>(rng() % 5) - 2};
        if (v.is_zero())
            continue;
        CHECK(dominating_tiles(inst.path, v).dominating == brute(inst.path, v));
    }
}

TEST_CASE("visibility agrees with a direct ray scan")
{
    std::mt19937_64 rng(17);
    for (int n = 0; n < 300; ++n) {
        auto inst = tptest::draw_instance(rng, {1, 3, 2, 4, 16, 3, false});
        for (Side side : {Side::East, Side::West}) {
            auto r = visible_glues(inst.path, inst.tas.seed(), side);
            std::set<Coord> levels;
            for (const auto& e : r.visible)
                CHECK(levels.insert(e.level).second);
            std::size_t expected = 0;
            for (const auto& e : glue_edges(inst.path))
                expected += tptest::oracle::visible_by_scan(inst.tas.seed(), inst.path, e.level, e.x,
                                                            side == Side::East);
            CHECK(r.visible.size() == expected);
            for (const auto& e : r.visible)
                CHECK(tptest::oracle::visible_by_scan(inst.tas.seed(), inst.path, e.level, e.x, side == Side::East));
        }
    }
}

TEST_CASE("mirror symmetry of visibility")
{
    std::mt19937_64 rng(23);
    for (int n = 0; n < 200; ++n) {
        auto inst = tptest::draw_instance(rng);
        auto m = tptest::mirror(inst);
        for (Side side : {Side::East, Side::West})
            CHECK(mirror(visible_glues(inst.path, inst.tas.seed(), side)) ==
                  visible_glues(m.path, m.tas.seed(), other(side)));
    }
}

TEST_CASE("watershed and order hold on random last-highest paths")
{
    std::mt19937_64 rng(29);
    for (int n = 0; n < 1000; ++n) {
        auto inst = tptest::draw_instance(rng, {1, 3, 2, 2, 20, 3, true});
        CHECK(watershed(inst.path, inst.tas.seed()).split);
        CHECK(check_order(inst.path, inst.tas.seed()).ok);
    }
}
