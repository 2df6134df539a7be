#pragma once

// Blocking sets: point sets B such that the Delaunay triangulation of P + B
// has no edge between two points of P.

#include <dtough/delaunay.hpp>

#include <optional>
#include <vector>

namespace dtough {

struct BlockingVerdict
{
    bool blocked = false;
    /// Some P-P edge of Del(P + B) when not blocked.
    std::optional<Edge> witness;
};

/// Indices in the witness refer to P (B would follow it). Throws
/// PreconditionViolated when |P| < 2, DegenerateInput when P + B is not in
/// general position.
BlockingVerdict verify_blocking(const std::vector<Point>& p,
                                const std::vector<Point>& b);

struct LowerBoundReport
{
    bool blocked = false;
    std::optional<Edge> witness;
    /// Set only for blocked instances.
    std::optional<bool> p_independent;
    std::optional<bool> size_ok;

    /// A blocked instance with |B| < |P| or a P-P edge would contradict the
    /// lower bound.
    bool alarm() const
    {
        return blocked && (!p_independent.value_or(false) ||
                           !size_ok.value_or(false));
    }
};

LowerBoundReport lower_bound_report(const std::vector<Point>& p,
                                    const std::vector<Point>& b);

struct BlockingInstance
{
    std::vector<Point> p;
    std::vector<Point> b;
    bool verified = false;
    /// Blocker offset and radial jitter that passed verification.
    Coord epsilon;
    Coord delta;
};

constexpr int kMaxHalvings = 40;

/// p at the origin with n - 1 points near the unit circle around it,
/// spanning less than a half-plane, plus n blockers: two next to p just
/// outside its hull edges and one just outside each hull edge not incident
/// to p. The seed jitters the radii. Throws PreconditionViolated for n < 4
/// and ConstructionFailed if no halving verifies.
BlockingInstance fan_instance(int n, std::uint64_t seed = 0);

struct DisjointDiskInstance
{
    std::vector<Point> p;
    /// One witness disk per edge between consecutive points.
    std::vector<Disk> disks;
    bool pairwise_disjoint = false;
    Coord flatness; ///< M in y = x^2 / M
};

/// n points on a flat convex arc with gaps growing by a factor of 3, and a
/// chain of empty witness disks for the consecutive edges, each tangent to
/// the next at their shared point. Throws PreconditionViolated for n < 2 and
/// ConstructionFailed after 40 doublings of M.
DisjointDiskInstance disjoint_disk_instance(int n);

} // namespace dtough
