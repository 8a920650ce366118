#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tilepump/model/path.hpp"

namespace tptest {

using namespace tilepump;

struct RandomInstance {
    TileAssemblySystem tas;
    PathAssembly path;
};

struct RandomSpec {
    std::size_t min_types = 1;
    std::size_t max_types = 3;
    std::size_t labels = 2;
    std::size_t min_length = 4;
    std::size_t max_length = 14;
    std::size_t max_seed = 2;  // horizontal seed row of 1..max_seed tiles
    bool last_highest = false;
    unsigned north_weight = 1;  // relative weight of northward steps in the walk
};

// Random tile set, seed and a random producible walk. Returns nullopt when the
// walk gets stuck before min_length; callers retry.
std::optional<RandomInstance> random_instance(std::mt19937_64& rng, const RandomSpec& spec = {});

// Keeps drawing until an instance satisfies the spec.
RandomInstance draw_instance(std::mt19937_64& rng, const RandomSpec& spec = {});

RandomInstance mirror(const RandomInstance& r);

}  // namespace tptest
