#include "doctest.h"
#include "tilepump/certify.hpp"
#include "tilepump/model/errors.hpp"
#include "tilepump/movies/bounds.hpp"
#include "tilepump/movies/cagefree.hpp"
#include "tilepump/movies/diet.hpp"
#include "tilepump/movies/movie.hpp"
#include "tilepump/movies/wml.hpp"
#include "tptest/fixtures.hpp"
#include "tptest/oracles.hpp"

using namespace tilepump;
using tptest::fixture;

namespace {

Box clip_for(const io::Instance& inst, Coord margin = 2)
{
    return inst.path.bounds().united(inst.tas.seed().bounds()).expanded(margin);
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidVector;
}

std::string big(const std::string& name, std::map<std::string, std::uint64_t> params)
{
    return bound(name, params).value.str();
}

}  // namespace

TEST_CASE("record_movie on a horizontal line")
{
    const auto line = fixture("line-e");
    const Box clip = clip_for(line);
    auto m = record_movie(line.tas, line.path, Window::vertical(2, clip));
    REQUIRE(m.events.size() == 1);
    CHECK(m.events[0] == MovieEvent{{2, 0}, "a", Dir::East});
    CHECK(m.placed_by[0] == 3);

    const auto col = fixture("col-n");
    CHECK(record_movie(col.tas, col.path, Window::vertical(0, clip_for(col))).empty());

    // Every crossing of LINE-E looks the same up to translation.
    const auto first = record_movie(line.tas, line.path, Window::vertical(0, clip));
    for (Coord x = 1; x <= 4; ++x) {
        auto other = record_movie(line.tas, line.path, Window::vertical(x, clip));
        CHECK(movies_equal_upto(first, other, {x, 0}));
        CHECK_FALSE(movies_equal_upto(first, other, {x, 1}));
    }

    CHECK(code_of([&] { record_movie(line.tas, line.path, Window::vertical(2, Box{0, 0, 2, 0})); }) ==
          ErrorCode::WindowClipError);
}

TEST_CASE("record_movie prefixes and translation")
{
    const auto detour = fixture("detour");
    const auto w = Window::vertical(1, clip_for(detour));
    const auto full = record_movie(detour.tas, detour.path, w);
    REQUIRE(full.events.size() == 3);
    CHECK(full.events[1] == MovieEvent{{1, 2}, "g4", Dir::West});
    CHECK(full.placed_by == std::vector<std::size_t>{2, 5, 8});
    for (std::size_t k = 1; k <= detour.path.size(); ++k) {
        auto part = record_movie(detour.tas, detour.path, k, w);
        REQUIRE(part.events.size() <= full.events.size());
        for (std::size_t e = 0; e < part.events.size(); ++e) {
            CHECK(part.events[e] == full.events[e]);
            CHECK(part.placed_by[e] <= k);
        }
    }

    auto shifted = full;
    for (auto& e : shifted.events)
        e.anchor += Vector{3, -1};
    CHECK(movies_equal_upto(full, shifted, {3, -1}));
    auto back = shifted;
    for (auto& e : back.events)
        e.anchor += Vector{-1, 4};
    CHECK(movies_equal_upto(full, back, {2, 3}));

    auto swapped = full;
    std::swap(swapped.events[0], swapped.events[1]);
    CHECK_FALSE(movies_equal_upto(full, swapped, {0, 0}));
    auto relabelled = full;
    relabelled.events[1].label = "zz";
    CHECK_FALSE(movies_equal_upto(full, relabelled, {0, 0}));
    auto shorter = full;
    shorter.events.pop_back();
    shorter.placed_by.pop_back();
    CHECK_FALSE(movies_equal_upto(full, shorter, {0, 0}));
}

TEST_CASE("wml_pump on a line")
{
    const auto line = fixture("line-e");
    const Box clip = clip_for(line);
    auto r = wml_pump(line.tas, line.path, Window::vertical(1, clip), {2, 0});
    CHECK(r.kind == WmlResult::Kind::Pumpable);
    REQUIRE(r.pumpable);
    CHECK(verify_pumpable(line.tas, line.path, *r.pumpable));
    CHECK(tptest::oracle::pumpable_valid(line.tas, line.path, *r.pumpable));
    CHECK(r.u == 2);
    CHECK(r.v == 4);

    auto vertical = wml_pump(line.tas, line.path, Window::vertical(1, clip), {0, 2});
    CHECK(vertical.kind == WmlResult::Kind::NotApplicable);
    auto behind = wml_pump(line.tas, line.path, Window::vertical(-1, clip), {2, 0});
    CHECK(behind.kind == WmlResult::Kind::NotApplicable);
}

TEST_CASE("wml_pump on a detour blocked by its own excursion")
{
    const auto detour = fixture("detour");
    auto r = wml_pump(detour.tas, detour.path, Window::vertical(1, clip_for(detour)), {3, 0});
    CHECK(r.k == 31);
    CHECK(r.u == 8);
    CHECK(r.v == 31);
    CHECK(r.kind == WmlResult::Kind::Fragile);
    REQUIRE(r.fragile);
    CHECK(r.fragile->conflict_point == Point{5, -1});
    CHECK(verify_fragile(detour.tas, detour.path, *r.fragile));
    CHECK(tptest::oracle::fragile_valid(detour.tas, detour.path, *r.fragile));

    // Moving the second window so the movies cut elsewhere.
    auto off = wml_pump(detour.tas, detour.path, Window::vertical(1, clip_for(detour)), {2, 0});
    CHECK(off.kind != WmlResult::Kind::Fragile);
}

TEST_CASE("diet_check")
{
    const auto line = fixture("line-e");
    auto r = diet_check(line.tas, line.path, {2, 0});
    CHECK(r.kind == DietResult::Kind::RepeatFound);
    CHECK(r.side == Dir::East);
    CHECK(r.index == 3);
    REQUIRE(r.w1);
    REQUIRE(r.w2);
    CHECK(r.w1->x == 0);
    CHECK(r.w2->x == 1);
    CHECK(r.v == Vector{1, 0});

    const auto col = fixture("col-n");
    auto c = diet_check(col.tas, col.path, {0, 2});
    CHECK(c.kind == DietResult::Kind::Escape);
    CHECK(c.side == Dir::North);
    CHECK(c.index == 3);

    CHECK(diet_check(line.tas, line.path, {10, 10}).kind == DietResult::Kind::Exhausted);
    CHECK(code_of([&] { diet_check(line.tas, line.path, {-1, 0}); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("cagefree separators")
{
    CHECK(separator_base({0, 0}, {1, 2}) == std::vector<Point>{{0, 0}, {0, 1}, {0, 2}});
    CHECK(separator_base({3, 1}, {-2, 1}) == std::vector<Point>{{3, 1}, {3, 2}, {2, 2}});

    const auto tall = fixture("col-n-tall");
    auto seps = cagefree_separators(tall.tas, tall.path, 1, {1, 2});
    REQUIRE(seps.size() == 5);
    for (std::size_t s = 0; s < seps.size(); ++s) {
        CHECK(seps[s].kind == Window::Kind::Periodic);
        CHECK(seps[s].separator.offset == Vector{0, static_cast<Coord>(2 * s)});
        CHECK(seps[s].separator.v == Vector{1, 2});
    }
    CHECK(cagefree_separators(tall.tas, tall.path, 5, {1, 2}).size() == 3);

    CHECK(code_of([&] { cagefree_separators(tall.tas, tall.path, 1, {1, 0}); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { cagefree_separators(tall.tas, tall.path, 1, {0, 2}); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { cagefree_separators(tall.tas, tall.path, 11, {1, 2}); }) == ErrorCode::InvalidIndex);
}

TEST_CASE("bounds")
{
    CHECK(big("f_b", {{"T", 1}, {"n", 1}}) == "3");
    CHECK(big("B_seed", {{"T", 2}, {"sigma", 1}}) == "5");
    CHECK(big("B_s", {{"T", 1}, {"w", 3}, {"h", 2}}) == "32");
    CHECK(big("f_b", {{"T", 3}, {"n", 3}}) ==
          "126886932185884164103433389335161480802865516174545192198801894375214704230400000000000001");
    CHECK(big("N_cagefree", {{"T", 2}, {"n", 5}, {"v1", 2}}) == "41845579776007");
    CHECK(big("B_s", {{"T", 3}, {"w", 4}, {"h", 5}}) == "10077696");
    CHECK(big("B_d", {{"T", 2}, {"sigma", 1}}) == "26");
    CHECK(big("B_d_small", {{"T", 2}}) == "6");

    CHECK(bound("B_d", {{"T", 2}, {"sigma", 1}}).params.at("T") == 2);
    CHECK_FALSE(bound("B_s", {{"T", 1}, {"w", 3}, {"h", 2}}).formula.empty());
    CHECK(bound_names().size() == 6);
    for (const auto& r : bounds_for(2, 1))
        CHECK(r.value > 0);

    CHECK(code_of([] { bound("nope", {{"T", 1}}); }) == ErrorCode::UnknownBound);
    CHECK(code_of([] { bound("f_b", {{"T", 1}}); }) == ErrorCode::UnknownBound);
    CHECK(code_of([] { bound("f_b", {{"T", 0}, {"n", 1}}); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([] { bound("f_b", {{"T", 50}, {"n", 50}}); }) == ErrorCode::BoundTooLarge);
}
