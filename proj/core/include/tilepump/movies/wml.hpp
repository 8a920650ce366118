#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tilepump/certify.hpp"
#include "tilepump/movies/movie.hpp"

namespace tilepump {

struct WmlResult {
    enum class Kind { Pumpable, Fragile, Unresolved, NotApplicable };
    Kind kind = Kind::NotApplicable;
    std::optional<PumpableCertificate> pumpable;
    std::optional<FragileCertificate> fragile;
    std::size_t k = 0;  // first prefix whose movies on w and w+v agree
    std::size_t u = 0;
    std::size_t v = 0;
    std::string reason;
};

std::string to_string(WmlResult::Kind k);

// Pumps P between the last tiles of the first agreeing prefix on w and w + v.
// NotApplicable when the windows share an edge or the seed is not on the near
// side of both.
WmlResult wml_pump(const TileAssemblySystem& tas, const PathAssembly& p, const Window& w, Vector v);

}  // namespace tilepump
