#pragma once

// Combinatorial checks on Delaunay triangulations: separators and
// toughness, independent sets, perfect matchings, and the counting audit
// that bounds independent sets through distinguished angles.

#include <dtough/delaunay.hpp>

#include <optional>
#include <vector>

namespace dtough {

/// Subset of the vertices of a host graph with `size()` vertices.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
    VertexSet(std::size_t universe, std::initializer_list<int> members);
    static VertexSet from_indices(std::size_t universe,
                                  const std::vector<int>& members);

    std::size_t universe() const { return bits_.size(); }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    /// Sorted member list.
    std::vector<int> members() const;
    VertexSet complement() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<bool> bits_;
};

/// Connected components of T - S, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components_after_removal(const Triangulation& t,
                                                       const VertexSet& s);

struct Toughness
{
    /// min |S| / #components over separating S.
    Coord ratio;
    VertexSet witness;
    std::size_t components;
};

enum class EnumerationOrder { ASCENDING, DESCENDING };

constexpr std::size_t kToughnessLimit = 18;

/// Exhaustive scan over all nonempty S. nullopt when no S leaves two or more
/// components. Among minimizers, the witness is the first S met in the
/// requested enumeration order (subsets as bitmasks). `threads` > 1 splits
/// the range; the result does not depend on it. Throws TooLarge above
/// `limit` vertices.
std::optional<Toughness>
toughness_exhaustive(const Triangulation& t,
                     EnumerationOrder order = EnumerationOrder::ASCENDING,
                     unsigned threads = 1, std::size_t limit = kToughnessLimit);

bool is_independent(const Triangulation& t, const VertexSet& s);

struct IndependentSet
{
    std::size_t size;
    VertexSet certificate;
};

constexpr std::size_t kMisLimit = 30;

/// Maximum independent set by branch and bound. Throws TooLarge above
/// `limit` vertices.
IndependentSet max_independent_set(const Triangulation& t,
                                   std::size_t limit = kMisLimit);

using Matching = std::vector<Edge>;

/// Maximum cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Edges are returned sorted.
Matching maximum_matching(std::size_t n, const std::vector<Edge>& edges);

/// A perfect matching of T, or nullopt if none exists.
std::optional<Matching> perfect_matching(const Triangulation& t);

/// Same for a raw point set; two points are matched by their single edge.
std::optional<Matching> perfect_matching(std::span<const Point> points);

struct SentinelAugmentation
{
    /// Delaunay triangulation of V(T) plus v and w. Vertex i < |T| is
    /// vertex i of T; v is |T| and w is |T| + 1.
    Triangulation augmented;
    int u;
    Point v;
    Point w;
};

/// Adds two far points v, w so that T lies in triangle (u, v, w) for a hull
/// vertex u in S, v and w are outside every face circumdisk of T, and every
/// edge of T survives in the augmented triangulation. Throws
/// PreconditionViolated if S has no hull vertex, SearchExhausted if no
/// placement verifies within 64 doublings.
SentinelAugmentation sentinel_augment(const Triangulation& t,
                                      const VertexSet& s);

struct AuditReport
{
    Point sentinel_v;
    Point sentinel_w;
    int anchor_u = -1;
    std::size_t independent_size = 0;
    std::size_t g = 0; ///< good faces
    std::size_t b = 0; ///< bad faces
    std::size_t e = 0; ///< edges of the induced subgraph
    std::size_t s_size = 0;
    /// Faces are simple, good ones are triangles, each bad face holds
    /// exactly one removed vertex, and the outer face is (u, v, w).
    bool faces_ok = false;
    bool euler_ok = false;
    /// 180 g + 360 b, the exact total of the distinguished angles.
    long d_exact = 0;
    /// Floating sum of the same angles, measured one by one.
    double d_degrees = 0.0;
    bool d_agrees = false;
    /// Every interior edge passes the exact opposite-angle test.
    bool per_edge_exact_ok = false;
    /// 180 g + 360 b < 180 e.
    bool strict_inequality = false;
    bool b_equals_independent = false;
    bool conclusion_b_le = false;
    bool bound_ok = false; ///< |I| <= floor(|T| / 2)

    bool passed() const
    {
        return faces_ok && euler_ok && d_agrees && per_edge_exact_ok &&
               strict_inequality && b_equals_independent && conclusion_b_le &&
               bound_ok;
    }
};

constexpr double kAngleRelTolerance = 1e-6;

/// Runs the distinguished-angle counting argument for an independent set I
/// and records every intermediate count. Throws NotIndependent.
AuditReport angle_audit(const Triangulation& t, const VertexSet& independent);

struct RepresentativeReport
{
    std::size_t component_count;
    /// Delaunay triangulation of S plus the representatives, with vertices in
    /// increasing original index; original_index maps back into T.
    Triangulation reduced;
    std::vector<int> original_index;
    VertexSet representatives;
    bool independent;
};

/// Picks the lowest vertex of each component of T - S, triangulates S plus
/// those representatives and reports whether the representatives stay
/// pairwise non-adjacent. Throws PreconditionViolated when fewer than three
/// points remain.
RepresentativeReport representative_independence(const Triangulation& t,
                                                 const VertexSet& s);

} // namespace dtough
