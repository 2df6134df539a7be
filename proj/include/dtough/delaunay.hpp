#pragma once

#include <dtough/exactgeom.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dtough {

using Triangle = std::array<int, 3>;

/// Undirected edge, normalized so that `a < b`.
struct Edge
{
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeKind { BOUNDARY, INTERIOR };

/// Thrown by build() when the input is not in general position.
class DegenerateInput : public Error
{
public:
    explicit DegenerateInput(GeneralPositionViolation v);
    GeneralPositionViolation violation;
};

/// A triangulation of a planar point set in general position.
///
/// Triangles are CCW and stored in canonical form (smallest index first,
/// list sorted), so two triangulations with the same faces compare equal
/// regardless of how they were built. The hull is CCW and starts at its
/// smallest vertex index.
class Triangulation
{
public:
    /// Validates the structural invariants (CCW faces, edge degrees, convex
    /// hull, Euler counts) and throws InvariantBroken if one fails.
    Triangulation(std::vector<Point> vertices, std::vector<Triangle> triangles);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const std::vector<int>& hull() const { return hull_; }

    /// All edges in sorted order.
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    EdgeKind kind(const Edge& e) const;
    /// Indices into triangles() of the one or two faces incident to e.
    /// Throws NotAnEdge.
    const std::vector<int>& incident_triangles(const Edge& e) const;
    /// Vertices opposite to e in its incident faces.
    std::vector<int> apexes(const Edge& e) const;
    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const
    {
        return neighbors_[static_cast<std::size_t>(v)];
    }
    bool on_hull(int v) const { return on_hull_[static_cast<std::size_t>(v)]; }

    std::size_t interior_edge_count() const;
    std::size_t boundary_edge_count() const { return hull_.size(); }

    friend bool operator==(const Triangulation& a, const Triangulation& b)
    {
        return a.vertices_ == b.vertices_ && a.triangles_ == b.triangles_;
    }

private:
    std::vector<Point> vertices_;
    std::vector<Triangle> triangles_;
    std::vector<int> hull_;
    std::vector<Edge> edges_;
    std::map<Edge, std::vector<int>> adjacency_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<bool> on_hull_;
};

/// Delaunay triangulation by randomized incremental insertion with Lawson
/// flips. Vertex indices follow the input order; `seed` only affects the
/// insertion order, never the result. Throws TooFewPoints or
/// DegenerateInput.
Triangulation build(std::span<const Point> points, std::uint64_t seed = 0);

struct DelaunayCounterExample
{
    int triangle;
    int vertex;
};

/// Brute-force empty-circle check over every (face, vertex) pair.
std::optional<DelaunayCounterExample> verify_delaunay(const Triangulation& t);

enum class AngleCheck { OK, VIOLATED };

/// For an interior edge pq with faces pqr and pqs, whether the opposite
/// angles at r and s sum to less than 180 degrees. Decided exactly: that
/// holds iff s is strictly outside the circle through p, q, r.
/// Throws NotInteriorEdge.
AngleCheck edge_angle_check(const Triangulation& t, const Edge& e);

/// A closed disk with exactly the endpoints of e on its boundary and every
/// other vertex strictly outside. Throws WitnessSearchFailed.
Disk witness_disk(const Triangulation& t, const Edge& e);

/// Replaces the interior edge e by the other diagonal of its quadrilateral.
/// The result is generally not Delaunay; used to produce counterexamples.
Triangulation flip(const Triangulation& t, const Edge& e);

/// Whether every edge of `sub` is an edge of `super` once sub vertex i is
/// mapped to super vertex index_map[i].
bool edges_included(const Triangulation& sub, const Triangulation& super,
                    std::span<const int> index_map);

} // namespace dtough
