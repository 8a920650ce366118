#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tilepump/io/api.hpp"
#include "tilepump/io/serialize.hpp"
#include "tilepump/io/svg.hpp"
#include "tilepump/model/errors.hpp"

using namespace tilepump;
using namespace tilepump::io;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalidInstance = 2, kBudget = 3 };

std::optional<std::chrono::milliseconds> env_budget()
{
    const char* v = std::getenv("TILEPUMP_BUDGET_MS");
    if (!v || !*v)
        return std::nullopt;
    char* end = nullptr;
    const long long ms = std::strtoll(v, &end, 10);
    if (*end != '\0' || ms <= 0)
        throw CLI::ValidationError("TILEPUMP_BUDGET_MS", "expected a positive integer");
    return std::chrono::milliseconds(ms);
}

Json read_json(const std::string& file)
{
    std::ifstream in(file);
    if (!in)
        throw ParseError(ParseErrorKind::Syntax, "", "cannot read " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, "", file + ": malformed JSON at byte " + std::to_string(e.byte));
    }
}

Json limits_json(const std::vector<std::string>& pairs)
{
    Json j = Json::object();
    for (const auto& kv : pairs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--limits", "expected key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (value == "true" || value == "false")
            j[key] = value == "true";
        else if (!value.empty() && value.find_first_not_of("0123456789") == std::string::npos && value.size() < 19)
            j[key] = std::stoull(value);
        else
            throw CLI::ValidationError("--limits", "value of " + key + " must be a non-negative integer");
    }
    return j;
}

std::pair<Coord, Coord> two_ints(const std::string& s, const std::string& what)
{
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos)
            throw std::invalid_argument(s);
        std::size_t used = 0;
        const Coord a = std::stoll(s.substr(0, comma), &used);
        const Coord b = std::stoll(s.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--overlay", what + " expects two integers 'a,b'");
    }
}

Overlays overlays_from_specs(const Instance& inst, const std::vector<std::string>& specs)
{
    Overlays ov;
    for (const auto& spec : specs) {
        const auto colon = spec.find(':');
        const std::string name = spec.substr(0, colon);
        const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
        if (name == "visibility") {
            ov.visibility = side_from_string(arg.empty() ? "east" : arg, "--overlay visibility");
        } else if (name == "dominating") {
            const auto [x, y] = two_ints(arg, name);
            ov.dominating = Vector{x, y};
        } else if (name == "pumping") {
            const auto [i, j] = two_ints(arg, name);
            if (i < 0 || j < 0)
                throw CLI::ValidationError("--overlay", "pumping indices must be positive");
            ov.pumping = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        } else if (name == "conflict") {
            const auto [x, y] = two_ints(arg, name);
            ov.conflict = Point{x, y};
        } else if (name == "analysis") {
            const FinalReport r = conclude(inst.tas, inst.path);
            for (const auto& t : r.detail.state.stake)
                ov.stake.push_back(t.pos);
            if (r.pumpable)
                ov.pumping = std::make_pair(r.pumpable->i, r.pumpable->j);
            if (r.fragile)
                ov.conflict = r.fragile->conflict_point;
        } else {
            throw CLI::ValidationError("--overlay", "unknown overlay '" + name + "'");
        }
    }
    return ov;
}

void print(const Json& j, bool pretty)
{
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pump-or-break analysis of temperature-1 tile assembly paths"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent JSON output");

    std::string file, cert_file, out_file, side = "east", host = "127.0.0.1";
    std::vector<std::string> limit_pairs, overlay_specs;
    std::size_t i = 0, j = 0;
    std::uint64_t tiles = 0, seed_size = 0;
    int port = 8080;

    auto* analyze = app.add_subcommand("analyze", "Run the full pump-or-break pipeline");
    analyze->add_option("file", file, "Instance file")->required();
    analyze->add_option("--limits", limit_pairs, "Limits as key=value")->delimiter(',');

    auto* pump = app.add_subcommand("pump", "Decide whether the pumping of P_[i,j] grows forever");
    pump->add_option("file", file, "Instance file")->required();
    pump->add_option("--i", i, "First index")->required();
    pump->add_option("--j", j, "Second index")->required();

    auto* vis = app.add_subcommand("visibility", "List glues visible from one side");
    vis->add_option("file", file, "Instance file")->required();
    vis->add_option("--side", side, "east or west")->check(CLI::IsMember({"east", "west"}));

    auto* uturn = app.add_subcommand("uturn", "Search for a nice U-turn");
    uturn->add_option("file", file, "Instance file")->required();

    auto* render = app.add_subcommand("render", "Draw the instance as SVG");
    render->add_option("file", file, "Instance file")->required();
    render->add_option("-o,--output", out_file, "Output SVG file")->required();
    render->add_option("--overlay", overlay_specs,
                       "visibility:east|west, dominating:x,y, pumping:i,j, conflict:x,y, analysis");

    auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
    verify->add_option("instance", file, "Instance file")->required();
    verify->add_option("certificate", cert_file, "Certificate file")->required();

    auto* bounds = app.add_subcommand("bounds", "Print the named bounds for |T| and |seed|");
    bounds->add_option("--tiles", tiles, "Number of tile types")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--seed-size", seed_size, "Number of seed tiles")->required()->check(CLI::PositiveNumber);

    auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
    serve->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
    serve->add_option("--host", host, "Bind address");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const auto budget = env_budget();
        if (*serve) {
            ApiConfig config;
            if (budget)
                config.budget = *budget;
            std::cerr << "serving on " << host << ":" << port << "\n";
            return run_server(host, port, config) ? kOk : kUsage;
        }
        if (*bounds) {
            print(bounds_command(tiles, seed_size), pretty);
            return kOk;
        }

        const Instance inst = load_instance(file);
        if (*analyze) {
            ConcludeLimits limits = limits_from_json(limits_json(limit_pairs));
            if (budget)
                limits.deadline = Deadline::after(*budget);
            print(analyze_command(inst, limits), pretty);
        } else if (*pump) {
            print(pump_command(inst, i, j), pretty);
        } else if (*vis) {
            print(visibility_command(inst, side_from_string(side, "--side")), pretty);
        } else if (*uturn) {
            print(uturn_command(inst), pretty);
        } else if (*render) {
            const std::string svg = render_svg(inst, overlays_from_specs(inst, overlay_specs));
            std::ofstream out(out_file);
            if (!out) {
                std::cerr << "error: cannot write " << out_file << "\n";
                return kUsage;
            }
            out << svg;
        } else if (*verify) {
            print(verify_command(inst, read_json(cert_file)), pretty);
        }
        return kOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "invalid " << (e.field().empty() ? "input" : e.field()) << ": " << e.reason() << "\n";
        return kInvalidInstance;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::SearchBudgetExhausted) {
            std::cerr << "budget exceeded: " << e.what() << "\n";
            return kBudget;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
