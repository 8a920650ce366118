#include "tilepump/io/api.hpp"

#include "tilepump/engine/uturn.hpp"
#include "tilepump/io/serialize.hpp"
#include "tilepump/io/svg.hpp"
#include "tilepump/model/errors.hpp"

namespace tilepump::io {

namespace {

ApiResponse json_response(int status, const Json& body)
{
    return {status, body.dump() + "\n", "application/json"};
}

ApiResponse error_response(int status, const std::string& kind, const std::string& message,
                           const std::string& field = {})
{
    Json j{{"error", kind}, {"message", message}};
    if (!field.empty())
        j["field"] = field;
    return json_response(status, j);
}

// Literal ints built in memory are signed until they pass through text.
bool non_negative(const Json& v)
{
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t uint_field(const Json& j, const char* key, const std::string& where)
{
    auto it = j.find(key);
    if (it == j.end() || !non_negative(*it))
        throw ParseError(ParseErrorKind::Schema, where.empty() ? key : where + "." + key,
                         "expected a non-negative integer");
    return it->get<std::size_t>();
}

const Json& instance_of(const Json& body)
{
    auto it = body.find("instance");
    if (it == body.end())
        throw ParseError(ParseErrorKind::Schema, "instance", "missing");
    return *it;
}

Overlays overlays_from_json(const Json& j)
{
    Overlays ov;
    if (j.is_null())
        return ov;
    if (!j.is_object())
        throw ParseError(ParseErrorKind::Schema, "overlays", "expected an object");
    if (auto it = j.find("visibility"); it != j.end()) {
        if (!it->is_string())
            throw ParseError(ParseErrorKind::Schema, "overlays.visibility", "expected east or west");
        ov.visibility = side_from_string(it->get<std::string>(), "overlays.visibility");
    }
    if (auto it = j.find("dominating"); it != j.end()) {
        const Point p = point_from_json(*it, "overlays.dominating");
        ov.dominating = Vector{p.x, p.y};
    }
    if (auto it = j.find("stake"); it != j.end()) {
        if (!it->is_array())
            throw ParseError(ParseErrorKind::Schema, "overlays.stake", "expected a list");
        for (std::size_t k = 0; k < it->size(); ++k)
            ov.stake.push_back(point_from_json((*it)[k], "overlays.stake[" + std::to_string(k) + "]"));
    }
    if (auto it = j.find("pumping"); it != j.end()) {
        ov.pumping = std::make_pair(uint_field(*it, "i", "overlays.pumping"), uint_field(*it, "j", "overlays.pumping"));
        if (it->contains("iterations"))
            ov.pumping_iterations = std::min<std::size_t>(uint_field(*it, "iterations", "overlays.pumping"), 64);
    }
    if (auto it = j.find("conflict"); it != j.end())
        ov.conflict = point_from_json(*it, "overlays.conflict");
    return ov;
}

Json overlays_for(const Instance& inst, const FinalReport& r)
{
    Json ov = Json::object();
    for (Side s : {Side::West, Side::East}) {
        Json rays = Json::array();
        for (const auto& ray : visible_glues(inst.path, inst.tas.seed(), s).rays)
            rays.push_back(Json{{"level", ray.level}, {"x", ray.x}});
        ov[std::string("visibility_") + std::string(side_name(s))] = rays;
    }
    Json stake = Json::array();
    for (const auto& t : r.detail.state.stake)
        stake.push_back(point_to_json(t.pos));
    ov["stake"] = stake;
    if (r.pumpable) {
        Json ghosts = Json::array();
        PumpedSequence q(inst.path, r.pumpable->i, r.pumpable->j);
        for (std::size_t k = r.pumpable->j + 1; k <= q.end_of_iteration(2); ++k)
            ghosts.push_back(placement_to_json(inst.tas.tiles(), q.at(k)));
        ov["pumping"] = ghosts;
    }
    if (r.fragile)
        ov["conflict"] = point_to_json(r.fragile->conflict_point);
    return ov;
}

}  // namespace

ConcludeLimits limits_from_json(const Json& j, ConcludeLimits base)
{
    if (j.is_null())
        return base;
    if (!j.is_object())
        throw ParseError(ParseErrorKind::Schema, "limits", "expected an object");
    for (const auto& [key, value] : j.items()) {
        const std::string field = "limits." + key;
        if (key == "check_invariants") {
            if (!value.is_boolean())
                throw ParseError(ParseErrorKind::Schema, field, "expected a boolean");
            base.check_invariants = value.get<bool>();
            continue;
        }
        if (!non_negative(value))
            throw ParseError(ParseErrorKind::Schema, field, "expected a non-negative integer");
        const auto n = value.get<std::uint64_t>();
        if (key == "max_steps")
            base.max_steps = n;
        else if (key == "height_budget")
            base.height_budget = static_cast<Coord>(n);
        else if (key == "stake_height_budget")
            base.stake_height_budget = static_cast<Coord>(n);
        else if (key == "continuation_steps")
            base.continuation_steps = n;
        else if (key == "south_attempt_cap")
            base.south_attempt_cap = n;
        else if (key == "fragility_max_length")
            base.fragility_max_length = n;
        else if (key == "fragility_max_assemblies")
            base.fragility.max_assemblies = n;
        else
            throw ParseError(ParseErrorKind::Schema, field, "unknown limit");
    }
    return base;
}

Json analyze_command(const Instance& inst, const ConcludeLimits& limits)
{
    const FinalReport r = conclude(inst.tas, inst.path, limits);
    Json j = to_json(inst.tas.tiles(), r);
    j["overlays"] = overlays_for(inst, r);
    return j;
}

Json pump_command(const Instance& inst, std::size_t i, std::size_t j)
{
    const PumpDecision d = decide_pumping(inst.tas, inst.path, i, j);
    Json out = to_json(d);
    out["i"] = i;
    out["j"] = j;
    if (d.infinite)
        out["certificate"] = to_json(inst.tas.tiles(), make_pumpable_certificate(inst.tas, inst.path, i, j));
    return out;
}

Json visibility_command(const Instance& inst, Side side)
{
    return to_json(visible_glues(inst.path, inst.tas.seed(), side));
}

Json uturn_command(const Instance& inst)
{
    Json out = Json::object();
    for (Side hand : {Side::West, Side::East}) {
        auto u = detect_nice_uturn(inst.tas, inst.path, hand);
        out[std::string(side_name(hand))] = u ? Json{{"i", u->i}, {"j", u->j}, {"k", u->k}} : Json(nullptr);
    }
    return out;
}

Json step_command(const Instance& inst, const Json& request)
{
    const TileSet& tiles = inst.tas.tiles();
    AlgoState state;
    if (auto it = request.find("state"); it != request.end() && !it->is_null()) {
        state = algo_state_from_json(*it, tiles);
    } else {
        const Side hand = request.contains("hand") && request["hand"].is_string()
                              ? side_from_string(request["hand"].get<std::string>(), "hand")
                              : Side::West;
        std::size_t i = 0, j = 0;
        if (request.contains("i") || request.contains("j")) {
            i = uint_field(request, "i", "");
            j = uint_field(request, "j", "");
        } else {
            const auto pair = find_initial_pair(inst.tas, inst.path, default_height_budget(inst.tas), hand);
            if (pair.kind == InitialPair::Kind::TooShort)
                throw Error(ErrorCode::PreconditionFailed, "no initial pair: " + pair.reason);
            i = pair.i;
            j = pair.j;
        }
        state = initial_state(inst.path, i, j, hand);
    }
    const StepResult r = algo_step(inst.tas, inst.path, state);
    Json out{{"halted", r.halted}, {"events", to_json(r.events)}};
    if (r.halted)
        out["outcome"] = to_json(tiles, *r.outcome);
    else
        out["state"] = to_json(tiles, r.next);
    return out;
}

Json verify_command(const Instance& inst, const Json& certificate)
{
    const Certificate cert = certificate_from_json(certificate, inst.tas.tiles());
    Verdict v;
    std::string kind;
    try {
        if (auto p = std::get_if<PumpableCertificate>(&cert)) {
            kind = "pumpable";
            v = verify_pumpable(inst.tas, inst.path, *p);
        } else {
            kind = "fragile";
            v = verify_fragile(inst.tas, inst.path, std::get<FragileCertificate>(cert));
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CertificateError)
            throw;
        v.accepted = false;
        v.reason = e.what();
    }
    Json out{{"kind", kind}, {"accepted", v.accepted}, {"reason", v.reason}};
    if (v.failed_step)
        out["failed_step"] = *v.failed_step;
    return out;
}

Json bounds_command(std::uint64_t tiles, std::uint64_t seed_size)
{
    Json out = Json::array();
    for (const auto& b : bounds_for(tiles, seed_size))
        out.push_back(to_json(b));
    return out;
}

ApiResponse ApiService::handle(const std::string& method, const std::string& path,
                               const std::map<std::string, std::string>& query, const std::string& body) const
{
    try {
        if (method == "GET" && path == "/api/v1/health")
            return {200, "ok", "text/plain"};
        if (method == "GET" && path == "/api/v1/bounds") {
            auto get = [&](const char* key) -> std::uint64_t {
                auto it = query.find(key);
                if (it == query.end() || it->second.empty() ||
                    it->second.find_first_not_of("0123456789") != std::string::npos || it->second.size() > 9)
                    throw ParseError(ParseErrorKind::Schema, key, "expected a positive integer");
                return std::stoull(it->second);
            };
            return json_response(200, bounds_command(get("tiles"), get("seed")));
        }
        const bool known = path == "/api/v1/analyze" || path == "/api/v1/step" || path == "/api/v1/render";
        if (!known)
            return error_response(404, "not-found", "no such endpoint");
        if (method != "POST")
            return error_response(405, "method-not-allowed", "use POST");
        if (body.size() > config_.max_body)
            return error_response(413, "too-large", "request body exceeds the size limit");

        Json req;
        try {
            req = Json::parse(body);
        } catch (const Json::parse_error& e) {
            return error_response(400, "syntax", std::string("malformed JSON at byte ") + std::to_string(e.byte));
        }
        if (!req.is_object())
            return error_response(400, "schema", "request must be an object");
        const Instance inst = parse_instance(instance_of(req));

        if (path == "/api/v1/render") {
            const Overlays ov = overlays_from_json(req.contains("overlays") ? req["overlays"] : Json());
            return {200, render_svg(inst, ov), "image/svg+xml"};
        }
        if (path == "/api/v1/step")
            return json_response(200, step_command(inst, req));

        ConcludeLimits limits = limits_from_json(req.contains("limits") ? req["limits"] : Json());
        limits.deadline = Deadline::after(config_.budget);
        const std::string command = req.contains("command") && req["command"].is_string()
                                        ? req["command"].get<std::string>()
                                        : "analyze";
        if (command == "analyze")
            return json_response(200, analyze_command(inst, limits));
        if (command == "pump")
            return json_response(200, pump_command(inst, uint_field(req, "i", ""), uint_field(req, "j", "")));
        if (command == "visibility") {
            const Side side = req.contains("side") && req["side"].is_string()
                                  ? side_from_string(req["side"].get<std::string>(), "side")
                                  : Side::East;
            return json_response(200, visibility_command(inst, side));
        }
        if (command == "uturn")
            return json_response(200, uturn_command(inst));
        return error_response(400, "schema", "unknown command '" + command + "'", "command");
    } catch (const ParseError& e) {
        return error_response(400, to_string(e.kind()), e.reason(), e.field());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::SearchBudgetExhausted)
            return error_response(503, std::string(to_string(e.code())), e.what());
        return error_response(422, std::string(to_string(e.code())), e.what());
    }
}

}  // namespace tilepump::io
