#include "tilepump/io/serialize.hpp"

namespace tilepump::io {

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& reason)
{
    throw ParseError(ParseErrorKind::Schema, field, reason);
}

// Literal ints built in memory are signed until they pass through text.
bool non_negative(const Json& v)
{
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t index_field(const Json& j, const char* key, const std::string& field)
{
    auto it = j.find(key);
    if (it == j.end() || !non_negative(*it))
        schema(field.empty() ? std::string(key) : field + "." + key, "expected a non-negative integer");
    return it->get<std::size_t>();
}

std::string string_field(const Json& j, const char* key, const std::string& field)
{
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        schema(field.empty() ? std::string(key) : field + "." + key, "expected a string");
    return it->get<std::string>();
}

TileId tile_field(const Json& j, const TileSet& tiles, const std::string& field)
{
    const std::string name = string_field(j, "tile", field);
    auto id = tiles.find(name);
    if (!id)
        throw ParseError(ParseErrorKind::UnknownTile, field + ".tile", "unknown tile '" + name + "'");
    return *id;
}

std::string_view attempt_name(AttemptResult r)
{
    switch (r) {
    case AttemptResult::Conflict: return "conflict";
    case AttemptResult::Infinite: return "infinite";
    case AttemptResult::BreaksP: return "breaks-path";
    }
    return "?";
}

AttemptResult attempt_from(const std::string& s, const std::string& field)
{
    if (s == "conflict")
        return AttemptResult::Conflict;
    if (s == "infinite")
        return AttemptResult::Infinite;
    if (s == "breaks-path")
        return AttemptResult::BreaksP;
    schema(field, "unknown attempt result '" + s + "'");
}

std::string_view pair_kind(InitialPair::Kind k)
{
    switch (k) {
    case InitialPair::Kind::Pair: return "pair";
    case InitialPair::Kind::UTurnFound: return "uturn";
    case InitialPair::Kind::TooShort: return "too-short";
    }
    return "?";
}

}  // namespace

std::string_view side_name(Side s)
{
    return s == Side::East ? "east" : "west";
}

Side side_from_string(const std::string& s, const std::string& field)
{
    if (s == "east")
        return Side::East;
    if (s == "west")
        return Side::West;
    schema(field, "expected east or west");
}

Json to_json(const TileSet&, const PumpableCertificate& c)
{
    return Json{{"version", kCertificateVersion},
                {"kind", "pumpable"},
                {"i", c.i},
                {"j", c.j},
                {"verified_horizon", c.verified_horizon},
                {"decision_horizon", c.decision_horizon}};
}

Json to_json(const TileSet& tiles, const FragileCertificate& c)
{
    Json order = Json::array();
    for (const auto& p : c.growth_order)
        order.push_back(placement_to_json(tiles, p));
    return Json{{"version", kCertificateVersion},
                {"kind", "fragile"},
                {"growth_order", order},
                {"conflict", point_to_json(c.conflict_point)}};
}

Certificate certificate_from_json(const Json& j, const TileSet& tiles)
{
    if (!j.is_object())
        schema("", "certificate must be an object");
    if (index_field(j, "version", "") != static_cast<std::size_t>(kCertificateVersion))
        schema("version", "unsupported certificate version");
    const std::string kind = string_field(j, "kind", "");
    if (kind == "pumpable")
        return PumpableCertificate{index_field(j, "i", ""), index_field(j, "j", ""),
                                   index_field(j, "verified_horizon", ""), index_field(j, "decision_horizon", "")};
    if (kind != "fragile")
        schema("kind", "expected pumpable or fragile");
    auto it = j.find("growth_order");
    if (it == j.end() || !it->is_array())
        schema("growth_order", "expected a list");
    FragileCertificate c;
    for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string field = "growth_order[" + std::to_string(k) + "]";
        const Json& e = (*it)[k];
        c.growth_order.push_back({point_from_json(e, field), tile_field(e, tiles, field)});
    }
    auto cp = j.find("conflict");
    if (cp == j.end())
        schema("conflict", "missing");
    c.conflict_point = point_from_json(*cp, "conflict");
    return c;
}

Json to_json(const TileSet& tiles, const AlgoState& s)
{
    Json stake = Json::array();
    for (const auto& t : s.stake)
        stake.push_back(Json{{"x", t.pos.x},
                             {"y", t.pos.y},
                             {"tile", tiles.name(t.tile)},
                             {"provenance", t.provenance == Provenance::FromP ? "P" : "P+w"},
                             {"index", t.index}});
    Json history = Json::array();
    for (const auto& h : s.history) {
        Json e{{"step", h.step},
               {"u", h.u},
               {"v", h.v},
               {"direction", h.direction == PumpDirection::North ? "north" : "south"},
               {"result", attempt_name(h.result)}};
        if (h.conflict)
            e["conflict"] = point_to_json(*h.conflict);
        history.push_back(e);
    }
    return Json{{"i", s.i},
                {"j", s.j},
                {"hand", side_name(s.hand)},
                {"mode", to_string(s.mode)},
                {"u", s.u},
                {"v", s.v},
                {"steps", s.steps},
                {"stake", stake},
                {"history", history}};
}

AlgoState algo_state_from_json(const Json& j, const TileSet& tiles)
{
    if (!j.is_object())
        schema("state", "expected an object");
    AlgoState s;
    s.i = index_field(j, "i", "state");
    s.j = index_field(j, "j", "state");
    s.u = index_field(j, "u", "state");
    s.v = index_field(j, "v", "state");
    s.steps = j.contains("steps") ? index_field(j, "steps", "state") : 0;
    s.hand = j.contains("hand") ? side_from_string(string_field(j, "hand", "state"), "state.hand") : Side::West;
    const std::string mode = j.contains("mode") ? string_field(j, "mode", "state") : "forward";
    if (mode != "forward" && mode != "backward")
        schema("state.mode", "expected forward or backward");
    s.mode = mode == "forward" ? Mode::Forward : Mode::Backward;
    if (auto it = j.find("stake"); it != j.end()) {
        if (!it->is_array())
            schema("state.stake", "expected a list");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string field = "state.stake[" + std::to_string(k) + "]";
            const Json& e = (*it)[k];
            StakeTile t;
            t.pos = point_from_json(e, field);
            t.tile = tile_field(e, tiles, field);
            const std::string prov = string_field(e, "provenance", field);
            if (prov != "P" && prov != "P+w")
                schema(field + ".provenance", "expected P or P+w");
            t.provenance = prov == "P" ? Provenance::FromP : Provenance::FromPTranslated;
            t.index = index_field(e, "index", field);
            s.stake.push_back(t);
        }
    }
    if (auto it = j.find("history"); it != j.end()) {
        if (!it->is_array())
            schema("state.history", "expected a list");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string field = "state.history[" + std::to_string(k) + "]";
            const Json& e = (*it)[k];
            PumpAttempt a;
            a.step = index_field(e, "step", field);
            a.u = index_field(e, "u", field);
            a.v = index_field(e, "v", field);
            const std::string dir = string_field(e, "direction", field);
            if (dir != "north" && dir != "south")
                schema(field + ".direction", "expected north or south");
            a.direction = dir == "north" ? PumpDirection::North : PumpDirection::South;
            a.result = attempt_from(string_field(e, "result", field), field + ".result");
            if (auto c = e.find("conflict"); c != e.end())
                a.conflict = point_from_json(*c, field + ".conflict");
            s.history.push_back(a);
        }
    }
    return s;
}

Json to_json(const StepEvent& e)
{
    Json j{{"step", e.step},
           {"mode", to_string(e.mode)},
           {"u", e.u},
           {"v", e.v},
           {"branch_length", e.branch_length},
           {"zero_length", e.zero_length}};
    if (e.attempt)
        j["attempt"] = attempt_name(*e.attempt);
    if (e.branch_end)
        j["branch_end"] = point_to_json(*e.branch_end);
    if (!e.note.empty())
        j["note"] = e.note;
    return j;
}

Json to_json(const std::vector<StepEvent>& trace)
{
    Json out = Json::array();
    for (const auto& e : trace)
        out.push_back(to_json(e));
    return out;
}

Json to_json(const TileSet& tiles, const Outcome& o)
{
    Json j{{"kind", to_string(o.kind)}, {"reason", o.reason}, {"state", to_json(tiles, o.state)}};
    if (o.pumpable)
        j["certificate"] = to_json(tiles, *o.pumpable);
    if (o.fragile)
        j["certificate"] = to_json(tiles, *o.fragile);
    if (o.kind == OutcomeKind::CageFree) {
        j["mode"] = to_string(o.mode);
        j["suffix_index"] = o.suffix_index;
    }
    return j;
}

Json to_json(const InitialPair& p)
{
    Json j{{"kind", pair_kind(p.kind)}};
    if (p.kind != InitialPair::Kind::TooShort) {
        j["i"] = p.i;
        j["j"] = p.j;
    }
    if (p.kind == InitialPair::Kind::UTurnFound)
        j["k"] = p.k;
    if (!p.reason.empty())
        j["reason"] = p.reason;
    return j;
}

Json to_json(const TrousCheck& t)
{
    auto att = [](const PumpAttempt& a) { return Json{{"step", a.step}, {"u", a.u}, {"v", a.v}}; };
    Json j{{"kind", to_string(t.kind)}};
    if (t.first)
        j["first"] = att(*t.first);
    if (t.second)
        j["second"] = att(*t.second);
    if (t.confirming)
        j["confirming"] = att(*t.confirming);
    if (!t.detail.empty())
        j["detail"] = t.detail;
    return j;
}

Json to_json(const TileSet& tiles, const FinalReport& r)
{
    Json hands = Json::array();
    for (const auto& h : r.hands)
        hands.push_back(Json{{"hand", side_name(h.hand)},
                             {"pair", to_json(h.pair)},
                             {"outcome", to_string(h.outcome.kind)},
                             {"reason", h.outcome.reason},
                             {"steps", h.trace.size()},
                             {"notes", h.notes}});
    Json j{{"outcome", to_string(r.outcome)},
           {"reason", r.reason},
           {"hand", side_name(r.hand)},
           {"pair", to_json(r.pair)},
           {"trace", to_json(r.trace)},
           {"notes", r.notes},
           {"trous", to_json(r.trous)},
           {"state", to_json(tiles, r.detail.state)},
           {"hands", hands}};
    if (r.pumpable)
        j["certificate"] = to_json(tiles, *r.pumpable);
    if (r.fragile)
        j["certificate"] = to_json(tiles, *r.fragile);
    if (r.outcome == OutcomeKind::CageFree) {
        j["mode"] = to_string(r.detail.mode);
        j["suffix_index"] = r.detail.suffix_index;
    }
    return j;
}

Json to_json(const PumpDecision& d)
{
    Json j{{"infinite", d.infinite}, {"horizon", d.horizon}, {"self_horizon", d.self_horizon}};
    if (!d.infinite) {
        j["conflict"] = Json{{"point", point_to_json(d.point)},
                             {"index", d.index},
                             {"iteration", d.iteration},
                             {"against", d.against == ConflictAgainst::Obstacle ? "obstacle" : "self"}};
    }
    return j;
}

Json to_json(const VisibilityReport& r)
{
    Json glues = Json::array();
    for (std::size_t k = 0; k < r.visible.size(); ++k) {
        const auto& g = r.visible[k];
        glues.push_back(Json{{"index", g.index},
                             {"level", g.level},
                             {"x", g.x},
                             {"kind", g.kind == GlueKind::NorthOutput ? "north" : "south"}});
    }
    return Json{{"side", side_name(r.side)}, {"visible", glues}};
}

Json to_json(const BoundReport& b)
{
    return Json{{"name", b.name}, {"value", b.value.str()}, {"formula", b.formula}, {"params", b.params}};
}

Json to_json(const Movie& m)
{
    Json events = Json::array();
    for (std::size_t k = 0; k < m.events.size(); ++k) {
        const auto& e = m.events[k];
        events.push_back(Json{{"anchor", point_to_json(e.anchor)},
                              {"label", e.label},
                              {"direction", to_string(e.direction)},
                              {"placed_by", m.placed_by[k]}});
    }
    return events;
}

}  // namespace tilepump::io
