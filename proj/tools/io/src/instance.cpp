#include "tilepump/io/instance.hpp"

#include <fstream>
#include <sstream>

#include "tilepump/model/errors.hpp"

namespace tilepump::io {

std::string to_string(ParseErrorKind k)
{
    switch (k) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::Schema: return "schema";
    case ParseErrorKind::UnknownTile: return "unknown-tile";
    case ParseErrorKind::InvalidAssembly: return "invalid-assembly";
    case ParseErrorKind::UnstableSeed: return "unstable-seed";
    case ParseErrorKind::InvalidPath: return "invalid-path";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::string field, const std::string& reason)
    : std::runtime_error(field.empty() ? reason : field + ": " + reason),
      kind_(kind),
      field_(std::move(field)),
      reason_(reason)
{
}

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& reason)
{
    throw ParseError(ParseErrorKind::Schema, field, reason);
}

const Json& member(const Json& obj, const char* key, const std::string& field)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema(field.empty() ? key : field + "." + key, "missing");
    return *it;
}

Coord coord(const Json& j, const std::string& field)
{
    if (!j.is_number_integer())
        schema(field, "expected an integer");
    return j.get<Coord>();
}

Glue parse_glue(const Json& j, const std::string& field)
{
    if (j.is_null())
        return {};
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
        schema(field, "expected [label, strength]");
    const auto strength = j[1].get<long long>();
    if (strength < 0)
        schema(field, "negative glue strength");
    if (strength > 1000000)
        schema(field, "glue strength too large");
    Glue g{j[0].get<std::string>(), static_cast<int>(strength)};
    if (g.label.empty() && g.strength != 0)
        schema(field, "unlabelled glue with positive strength");
    return g;
}

std::vector<Placement> parse_placements(const Json& arr, const std::string& name, const TileSet& tiles)
{
    if (!arr.is_array())
        schema(name, "expected a list");
    std::vector<Placement> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string field = name + "[" + std::to_string(k) + "]";
        const Json& e = arr[k];
        if (!e.is_object())
            schema(field, "expected an object");
        const Json& t = member(e, "tile", field);
        if (!t.is_string())
            schema(field + ".tile", "expected a tile name");
        auto id = tiles.find(t.get<std::string>());
        if (!id)
            throw ParseError(ParseErrorKind::UnknownTile, field + ".tile", "unknown tile '" + t.get<std::string>() + "'");
        out.push_back({{coord(member(e, "x", field), field + ".x"), coord(member(e, "y", field), field + ".y")}, *id});
    }
    return out;
}

}  // namespace

Json glue_to_json(const Glue& g)
{
    return Json::array({g.label, g.strength});
}

Json point_to_json(Point p)
{
    return Json{{"x", p.x}, {"y", p.y}};
}

Point point_from_json(const Json& j, const std::string& field)
{
    if (!j.is_object())
        schema(field, "expected a point");
    return {coord(member(j, "x", field), field + ".x"), coord(member(j, "y", field), field + ".y")};
}

Json placement_to_json(const TileSet& tiles, const Placement& p)
{
    return Json{{"x", p.pos.x}, {"y", p.pos.y}, {"tile", tiles.name(p.tile)}};
}

Instance parse_instance(const Json& doc)
{
    if (!doc.is_object())
        schema("", "instance must be an object");
    const Json& ts = member(doc, "tileset", "");
    if (!ts.is_array() || ts.empty())
        schema("tileset", "expected a non-empty list");
    std::vector<TileType> types;
    static constexpr std::pair<const char*, Dir> sides[] = {
        {"north", Dir::North}, {"east", Dir::East}, {"south", Dir::South}, {"west", Dir::West}};
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const std::string field = "tileset[" + std::to_string(k) + "]";
        const Json& t = ts[k];
        if (!t.is_object())
            schema(field, "expected an object");
        const Json& name = member(t, "name", field);
        if (!name.is_string() || name.get<std::string>().empty())
            schema(field + ".name", "expected a non-empty string");
        TileType tt;
        tt.name = name.get<std::string>();
        for (const auto& [key, d] : sides) {
            auto it = t.find(key);
            if (it != t.end())
                tt.glue(d) = parse_glue(*it, field + "." + key);
        }
        for (std::size_t m = 0; m < types.size(); ++m)
            if (types[m].name == tt.name)
                schema(field + ".name", "duplicate tile name '" + tt.name + "'");
        types.push_back(std::move(tt));
    }
    TileSet tiles(std::move(types));

    const auto seed_steps = parse_placements(member(doc, "seed", ""), "seed", tiles);
    if (seed_steps.empty())
        throw ParseError(ParseErrorKind::InvalidAssembly, "seed", "seed is empty");
    Assembly seed;
    for (std::size_t k = 0; k < seed_steps.size(); ++k) {
        try {
            seed.place(seed_steps[k].pos, seed_steps[k].tile);
        } catch (const Error& e) {
            throw ParseError(ParseErrorKind::InvalidAssembly, "seed[" + std::to_string(k) + "]", e.what());
        }
    }
    Instance inst;
    try {
        inst.tas = TileAssemblySystem::make(tiles, seed);
    } catch (const Error& e) {
        const auto kind = e.code() == ErrorCode::UnstableSeed ? ParseErrorKind::UnstableSeed
                                                              : ParseErrorKind::InvalidAssembly;
        throw ParseError(kind, "seed", e.what());
    }

    const auto steps = parse_placements(member(doc, "path", ""), "path", tiles);
    try {
        inst.path = PathAssembly::make(inst.tas, steps);
    } catch (const Error& e) {
        std::string field = "path";
        if (e.index())
            field += "[" + std::to_string(*e.index() - 1) + "]";
        throw ParseError(ParseErrorKind::InvalidPath, field, e.what());
    }
    return inst;
}

Instance parse_instance(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, "", std::string("malformed JSON at byte ") + std::to_string(e.byte));
    }
    return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw ParseError(ParseErrorKind::Syntax, "", "cannot read " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

Json to_json(const Instance& inst)
{
    const TileSet& tiles = inst.tas.tiles();
    Json ts = Json::array();
    for (const auto& t : tiles.types())
        ts.push_back(Json{{"name", t.name},
                          {"north", glue_to_json(t.glue(Dir::North))},
                          {"east", glue_to_json(t.glue(Dir::East))},
                          {"south", glue_to_json(t.glue(Dir::South))},
                          {"west", glue_to_json(t.glue(Dir::West))}});
    Json seed = Json::array();
    for (const auto& p : inst.tas.seed().sorted())
        seed.push_back(placement_to_json(tiles, p));
    Json path = Json::array();
    for (const auto& p : inst.path.steps())
        path.push_back(placement_to_json(tiles, p));
    return Json{{"tileset", ts}, {"seed", seed}, {"path", path}};
}

std::string serialize_instance(const Instance& inst)
{
    return to_json(inst).dump(2) + "\n";
}

}  // namespace tilepump::io
