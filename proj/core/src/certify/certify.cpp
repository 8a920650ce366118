#include "tilepump/certify.hpp"

#include <algorithm>
#include <string>

#include "tilepump/model/errors.hpp"
#include "tilepump/model/pumping.hpp"

namespace tilepump {

namespace {

std::size_t recomputed_horizon(const TileAssemblySystem& tas, const PathAssembly& p, const PumpedSequence& q)
{
    Assembly obstacles = tas.seed();
    for (std::size_t k = 1; k < q.i(); ++k)
        obstacles.place(p.pos(k), p.type(k));
    return std::max(decision_horizon(obstacles, q), self_horizon(q));
}

}  // namespace

PumpableCertificate make_pumpable_certificate(const TileAssemblySystem& tas, const PathAssembly& p, std::size_t i,
                                              std::size_t j)
{
    PumpedSequence q(p, i, j);
    const std::size_t m = recomputed_horizon(tas, p, q);
    return {i, j, m, m};
}

Verdict verify_pumpable(const TileAssemblySystem& tas, const PathAssembly& p, const PumpableCertificate& cert)
{
    if (cert.i < 1 || cert.j <= cert.i || cert.j > p.size())
        throw Error(ErrorCode::CertificateError,
                    "pumpable certificate needs 1 <= i < j <= |P|, got i=" + std::to_string(cert.i) +
                        " j=" + std::to_string(cert.j));
    if (cert.verified_horizon < cert.decision_horizon)
        throw Error(ErrorCode::CertificateError, "verified horizon below decision horizon");
    if (p.type(cert.i) != p.type(cert.j))
        return {false, "type(P_i) differs from type(P_j)", std::nullopt};
    if (p.pos(cert.i) == p.pos(cert.j))
        return {false, "zero period", std::nullopt};

    PumpedSequence q(p, cert.i, cert.j);
    const std::size_t m = recomputed_horizon(tas, p, q);
    if (cert.decision_horizon < m || cert.verified_horizon < m)
        return {false, "certificate claims a horizon below " + std::to_string(m), std::nullopt};

    // Junction glues: Q_{j-1} must bind the first tile of each new period.
    const Dir junction = *step_dir(p.pos(cert.j - 1), p.pos(cert.j));
    if (!tas.tiles().interacts(p.type(cert.j - 1), junction, p.type(cert.i)))
        return {false, "junction glue does not bind", std::nullopt};

    const std::size_t last = q.end_of_iteration(cert.verified_horizon);
    std::vector<Placement> order = q.prefix(last);
    for (std::size_t k = 2; k <= order.size(); ++k) {
        auto d = step_dir(order[k - 2].pos, order[k - 1].pos);
        if (!d || !tas.tiles().interacts(order[k - 2].tile, *d, order[k - 1].tile))
            return {false, "consecutive tiles of the pumping do not bind", k};
    }
    try {
        (void)grow_sequence(tas, order);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::GrowthError)
            throw;
        return {false, e.what(), e.index()};
    }
    return {true, "pumping replays without conflict", std::nullopt};
}

Verdict verify_fragile(const TileAssemblySystem& tas, const PathAssembly& p, const FragileCertificate& cert)
{
    auto idx = p.index_of(cert.conflict_point);
    if (!idx)
        return {false, "conflict point is not a position of P", std::nullopt};
    Assembly grown;
    try {
        grown = grow_sequence(tas, cert.growth_order);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::GrowthError)
            throw;
        return {false, e.what(), e.index()};
    }
    auto t = grown.at(cert.conflict_point);
    if (!t)
        return {false, "growth order leaves the conflict point empty", std::nullopt};
    if (*t == p.type(*idx))
        return {false, "grown tile agrees with P at the conflict point", std::nullopt};
    return {true, "growth order replays and conflicts with P", std::nullopt};
}

}  // namespace tilepump
