#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tilepump/model/path.hpp"

namespace tilepump::io {

using Json = nlohmann::json;

struct Instance {
    TileAssemblySystem tas;
    PathAssembly path;
};

enum class ParseErrorKind { Syntax, Schema, UnknownTile, InvalidAssembly, UnstableSeed, InvalidPath };

std::string to_string(ParseErrorKind k);

// `field` is a JSON path such as "path[3].tile"; empty for syntax errors.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::string field, const std::string& reason);

    ParseErrorKind kind() const noexcept { return kind_; }
    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    ParseErrorKind kind_;
    std::string field_;
    std::string reason_;
};

Instance parse_instance(const std::string& text);
Instance parse_instance(const Json& doc);
Instance load_instance(const std::filesystem::path& file);

Json to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);

Json glue_to_json(const Glue& g);
Json point_to_json(Point p);
Point point_from_json(const Json& j, const std::string& field);
Json placement_to_json(const TileSet& tiles, const Placement& p);

}  // namespace tilepump::io
