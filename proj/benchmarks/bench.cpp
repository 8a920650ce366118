#include <benchmark/benchmark.h>

#include "tilepump/certify.hpp"
#include "tilepump/engine/algorithm.hpp"
#include "tilepump/engine/conclude.hpp"
#include "tilepump/engine/uturn.hpp"
#include "tilepump/io/instance.hpp"
#include "tilepump/model/fragility.hpp"
#include "tilepump/model/pumping.hpp"
#include "tilepump/movies/bounds.hpp"
#include "tilepump/movies/wml.hpp"
#include "tilepump/visibility.hpp"

using namespace tilepump;

namespace {

const io::Instance& fixture(const std::string& name)
{
    static std::map<std::string, io::Instance> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, io::load_instance(std::string(TILEPUMP_FIXTURE_DIR) + "/" + name + ".json")).first;
    return it->second;
}

// A single-type column of the given height above a one-tile seed.
io::Instance column(Coord height)
{
    const auto& col = fixture("col-n");
    std::vector<Placement> steps;
    for (Coord y = 1; y <= height; ++y)
        steps.push_back({{0, y}, col.path.type(1)});
    return {col.tas, PathAssembly::make(col.tas, steps)};
}

void BM_DecidePumping(benchmark::State& state)
{
    const auto inst = column(state.range(0));
    const auto j = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_pumping(inst.tas, inst.path, j / 2, j));
}
BENCHMARK(BM_DecidePumping)->Arg(16)->Arg(256)->Arg(4096);

void BM_VerifyPumpable(benchmark::State& state)
{
    const auto inst = column(state.range(0));
    const auto cert = make_pumpable_certificate(inst.tas, inst.path, 1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_pumpable(inst.tas, inst.path, cert));
}
BENCHMARK(BM_VerifyPumpable)->Arg(16)->Arg(256)->Arg(4096);

void BM_VisibleGlues(benchmark::State& state)
{
    const auto inst = column(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(visible_glues(inst.path, inst.tas.seed(), Side::East));
}
BENCHMARK(BM_VisibleGlues)->Arg(256)->Arg(4096)->Arg(65536);

void BM_NiceUTurn(benchmark::State& state)
{
    const auto& n = fixture("nshape");
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_nice_uturn(n.tas, n.path));
}
BENCHMARK(BM_NiceUTurn);

void BM_RunAlgorithmStairs(benchmark::State& state)
{
    const auto& s = fixture("stairs");
    for (auto _ : state)
        benchmark::DoNotOptimize(run_algorithm(s.tas, s.path, 7, 19, {}, Side::East));
}
BENCHMARK(BM_RunAlgorithmStairs);

void BM_Conclude(benchmark::State& state, const char* name)
{
    const auto& inst = fixture(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(conclude(inst.tas, inst.path));
}
BENCHMARK_CAPTURE(BM_Conclude, col_n_tall, "col-n-tall");
BENCHMARK_CAPTURE(BM_Conclude, nshape, "nshape");
BENCHMARK_CAPTURE(BM_Conclude, hook_s, "hook-s");
BENCHMARK_CAPTURE(BM_Conclude, stairs, "stairs");

void BM_FragilityWitness(benchmark::State& state)
{
    const auto& f = fixture("fork");
    for (auto _ : state)
        benchmark::DoNotOptimize(fragility_witness(f.tas, f.path));
}
BENCHMARK(BM_FragilityWitness);

void BM_WmlDetour(benchmark::State& state)
{
    const auto& d = fixture("detour");
    const Box clip = d.path.bounds().united(d.tas.seed().bounds()).expanded(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(wml_pump(d.tas, d.path, Window::vertical(1, clip), {3, 0}));
}
BENCHMARK(BM_WmlDetour);

void BM_BoundFb(benchmark::State& state)
{
    const std::map<std::string, std::uint64_t> params{{"T", 3}, {"n", static_cast<std::uint64_t>(state.range(0))}};
    for (auto _ : state)
        benchmark::DoNotOptimize(bound("f_b", params));
}
BENCHMARK(BM_BoundFb)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
