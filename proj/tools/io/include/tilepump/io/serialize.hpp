#pragma once

#include <variant>
#include <vector>

#include "tilepump/engine/conclude.hpp"
#include "tilepump/io/instance.hpp"
#include "tilepump/model/pumping.hpp"
#include "tilepump/movies/bounds.hpp"
#include "tilepump/movies/movie.hpp"

namespace tilepump::io {

using Certificate = std::variant<PumpableCertificate, FragileCertificate>;

Json to_json(const TileSet& tiles, const PumpableCertificate& c);
Json to_json(const TileSet& tiles, const FragileCertificate& c);
// Throws ParseError on schema problems or an unsupported version.
Certificate certificate_from_json(const Json& j, const TileSet& tiles);

Json to_json(const TileSet& tiles, const AlgoState& s);
AlgoState algo_state_from_json(const Json& j, const TileSet& tiles);

Json to_json(const StepEvent& e);
Json to_json(const std::vector<StepEvent>& trace);
Json to_json(const TileSet& tiles, const Outcome& o);
Json to_json(const InitialPair& p);
Json to_json(const TrousCheck& t);
Json to_json(const TileSet& tiles, const FinalReport& r);
Json to_json(const PumpDecision& d);
Json to_json(const VisibilityReport& r);
Json to_json(const BoundReport& b);
Json to_json(const Movie& m);

std::string_view side_name(Side s);
Side side_from_string(const std::string& s, const std::string& field);

}  // namespace tilepump::io
