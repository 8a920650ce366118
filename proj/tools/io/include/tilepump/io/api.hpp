#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>

#include "tilepump/engine/conclude.hpp"
#include "tilepump/io/instance.hpp"

namespace tilepump::io {

struct ApiConfig {
    std::chrono::milliseconds budget{10000};
    std::size_t max_body = 1 << 20;
};

struct ApiResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

// Recognised keys: max_steps, height_budget, stake_height_budget,
// continuation_steps, south_attempt_cap, fragility_max_length,
// fragility_max_assemblies, check_invariants. Anything else is a schema error.
ConcludeLimits limits_from_json(const Json& j, ConcludeLimits base = {});

// Command bodies shared by the CLI and the service.
Json analyze_command(const Instance& inst, const ConcludeLimits& limits);
Json pump_command(const Instance& inst, std::size_t i, std::size_t j);
Json visibility_command(const Instance& inst, Side side);
Json uturn_command(const Instance& inst);
Json step_command(const Instance& inst, const Json& request);
Json verify_command(const Instance& inst, const Json& certificate);
Json bounds_command(std::uint64_t tiles, std::uint64_t seed_size);

// Stateless request router; `query` holds decoded URL parameters.
class ApiService {
public:
    explicit ApiService(ApiConfig config = {}) : config_(config) {}

    ApiResponse handle(const std::string& method, const std::string& path,
                       const std::map<std::string, std::string>& query, const std::string& body) const;

    const ApiConfig& config() const { return config_; }

private:
    ApiConfig config_;
};

// Blocks serving the API on the given port. Returns false if binding fails.
bool run_server(const std::string& host, int port, const ApiConfig& config);

}  // namespace tilepump::io
