#pragma once

#include <cstddef>
#include <vector>

#include "tilepump/model/path.hpp"

namespace tilepump {

// The pumping Q of P between i and j:
//   Q_k = P_k for k < i, and P_{i + (k-i) mod (j-i)} + floor((k-i)/(j-i)) * (pos(P_j) - pos(P_i)) otherwise.
class PumpedSequence {
public:
    // Requires 1 <= i < j <= |P|, type(P_i) = type(P_j), pos(P_i) != pos(P_j).
    PumpedSequence(PathAssembly base, std::size_t i, std::size_t j);

    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }
    std::size_t period() const { return j_ - i_; }
    Vector shift() const { return shift_; }
    const PathAssembly& base() const { return base_; }

    Placement at(std::size_t k) const;
    std::vector<Placement> prefix(std::size_t n) const;  // Q_1 .. Q_n

    // 0 for k <= j (tiles of P itself); n >= 1 for the n-th translated copy
    // Q_{j+(n-1)p+1} .. Q_{j+np}.
    std::size_t iteration(std::size_t k) const;
    // Last index of iteration n.
    std::size_t end_of_iteration(std::size_t n) const { return j_ + n * period(); }

private:
    PathAssembly base_;
    std::size_t i_;
    std::size_t j_;
    Vector shift_;
};

PumpedSequence pumping(const PathAssembly& p, std::size_t i, std::size_t j);

enum class ConflictAgainst { Obstacle, SelfEarlier };

struct PumpDecision {
    bool infinite = false;
    // Set when !infinite: the first conflicting tile in growth order.
    Point point;
    std::size_t index = 0;      // Q index of the conflicting tile
    std::size_t iteration = 0;  // as PumpedSequence::iteration
    ConflictAgainst against = ConflictAgainst::Obstacle;
    // Horizons used: M iterations scanned, D inter-iteration deltas.
    std::size_t horizon = 0;
    std::size_t self_horizon = 0;
};

// M = floor((diam1(obstacles + one period) + diam1(period)) / max(1, |v|_inf)) + 2.
std::size_t decision_horizon(const Assembly& obstacles, const PumpedSequence& q);
// D = floor(diam1(period) / max(1, |v|_inf)) + 1.
std::size_t self_horizon(const PumpedSequence& q);

// Grows Q_first, Q_first+1, ... on top of `obstacles` and reports the first
// conflict, scanning iterations up to max(M, min_iterations).
PumpDecision decide_growth(const Assembly& obstacles, const PumpedSequence& q, std::size_t first,
                           std::size_t min_iterations = 0);

// Obstacles are seed + P_[1,i-1] + extra.
PumpDecision decide_pumping(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i, std::size_t j,
                            const Assembly& extra = {});

}  // namespace tilepump
