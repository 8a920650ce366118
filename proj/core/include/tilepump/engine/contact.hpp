#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tilepump/model/path.hpp"

namespace tilepump {

enum class LocalSide { Left, Right, Along, Free };

// Local orientation of P. At an interior vertex P_n the four directions split
// into the two path edges (Along), the open counterclockwise sector from the
// outgoing to the incoming edge (Left) and the complementary sector (Right).
// Endpoints have no sides (Free).
class PathSides {
public:
    explicit PathSides(const PathAssembly& p);

    LocalSide side(std::size_t n, Dir d) const;
    std::size_t size() const { return in_.size(); }

private:
    std::vector<int> in_;   // angle in eighths of a turn, -1 when absent
    std::vector<int> out_;
};

enum class ContactKind { Disjoint, TouchesSameSide, Crosses };

struct ContactResult {
    ContactKind kind = ContactKind::Disjoint;
    Point point;  // exit point of the crossing run when kind == Crosses
};

// Splits Q into maximal runs travelling along P and compares the side each
// run is entered from with the side it leaves to. Runs at either end of Q, or
// whose entry or exit lies on an endpoint of P, never count as crossings.
ContactResult classify_contact(std::span<const Point> q, const PathAssembly& p);
ContactResult classify_contact(std::span<const Point> q, const PathAssembly& p, const PathSides& sides);

}  // namespace tilepump
