#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilepump {

using BigInt = boost::multiprecision::cpp_int;

struct BoundReport {
    std::string name;
    BigInt value;
    std::string formula;
    std::map<std::string, std::uint64_t> params;
};

// Largest factorial argument or exponent evaluated before BoundTooLarge.
inline constexpr std::uint64_t kBoundArgumentLimit = 100000;

// Names: f_b(T, n), B_seed(T, sigma), B_d(T, sigma), B_d_small(T), B_s(T, w, h),
// N_cagefree(T, n, v1). Unknown names or missing parameters throw UnknownBound.
BoundReport bound(const std::string& name, const std::map<std::string, std::uint64_t>& params);

std::vector<std::string> bound_names();

// Every bound computable from |T| and |sigma| alone, plus f_b at n = B_d_small
// when that fits under the limit.
std::vector<BoundReport> bounds_for(std::uint64_t tiles, std::uint64_t seed_size);

}  // namespace tilepump
