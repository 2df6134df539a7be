#include "test_support.hpp"

#include <dtough/delaunay.hpp>

#include <doctest.h>

using namespace dtough;
using dtough::test::pts;

namespace {

void check_witnesses(const Triangulation& t)
{
    for (const auto& e : t.edges()) {
        const Disk d = witness_disk(t, e);
        for (int v = 0; v < static_cast<int>(t.size()); ++v) {
            const DiskSide expected = (v == e.a || v == e.b)
                                          ? DiskSide::BOUNDARY
                                          : DiskSide::EXTERIOR;
            CHECK(disk_classify(d, t.vertex(v)) == expected);
        }
    }
}

} // namespace

TEST_CASE("single triangle")
{
    auto t = build(pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(t.triangles().size() == 1);
    CHECK(t.boundary_edge_count() == 3);
    CHECK(t.interior_edge_count() == 0);
    CHECK(t.hull() == std::vector<int>{0, 1, 2});
    CHECK_FALSE(verify_delaunay(t));
    check_witnesses(t);
    CHECK_THROWS_AS(edge_angle_check(t, Edge(0, 1)), NotInteriorEdge);
}

TEST_CASE("interior point splits the hull triangle")
{
    // (1,1) lies inside the triangle of the other three points; the
    // expected faces come from the brute-force empty-circle enumeration.
    const auto p = pts({{0, 0}, {3, 0}, {1, 1}, {2, 5}});
    auto t = build(p);
    CHECK(test::sorted_faces(t) == test::brute_delaunay(p));
    CHECK(test::sorted_faces(t) ==
          std::set<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}, {1, 2, 3}});
    CHECK(t.interior_edge_count() == 3);
    CHECK(t.hull().size() == 3);
    for (const auto& e : t.edges())
        if (t.kind(e) == EdgeKind::INTERIOR)
            CHECK(edge_angle_check(t, e) == AngleCheck::OK);
    check_witnesses(t);
}

TEST_CASE("convex quadrilateral: Delaunay diagonal and its flip")
{
    // Brute force picks the diagonal 1-3.
    const auto p = pts({{0, 0}, {4, 0}, {5, 3}, {1, 4}});
    auto t = build(p);
    CHECK(test::sorted_faces(t) == test::brute_delaunay(p));
    REQUIRE(t.has_edge(1, 3));
    CHECK_FALSE(t.has_edge(0, 2));
    CHECK(t.kind(Edge(1, 3)) == EdgeKind::INTERIOR);
    CHECK(edge_angle_check(t, Edge(1, 3)) == AngleCheck::OK);

    const Disk w = witness_disk(t, Edge(1, 3));
    CHECK(disk_classify(w, p[0]) == DiskSide::EXTERIOR);
    CHECK(disk_classify(w, p[2]) == DiskSide::EXTERIOR);

    auto flipped = flip(t, Edge(1, 3));
    CHECK(flipped.has_edge(0, 2));
    CHECK(verify_delaunay(flipped));
    CHECK(edge_angle_check(flipped, Edge(0, 2)) == AngleCheck::VIOLATED);
    CHECK(flip(flipped, Edge(0, 2)) == t);
}

TEST_CASE("degenerate and undersized input")
{
    CHECK_THROWS_AS(build(pts({{0, 0}, {1, 0}})), TooFewPoints);
    try {
        build(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
        FAIL("expected DegenerateInput");
    } catch (const DegenerateInput& e) {
        CHECK(e.violation.kind == GeneralPositionViolation::Kind::COCIRCULAR);
    }
    CHECK_THROWS_AS(build(pts({{0, 0}, {1, 1}, {2, 2}})), DegenerateInput);
}

TEST_CASE("structural validation rejects malformed triangulations")
{
    const auto p = pts({{0, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(Triangulation(p, {{0, 2, 1}}), InvariantBroken);
    CHECK_THROWS_AS(Triangulation(pts({{0, 0}, {1, 0}, {0, 1}, {5, 5}}),
                                  {{0, 1, 2}}),
                    InvariantBroken);
    // Non-convex quadrilateral cannot be flipped.
    auto t = build(pts({{0, 0}, {3, 0}, {1, 1}, {2, 5}}));
    CHECK_THROWS_AS(flip(t, Edge(0, 2)), InvariantBroken);
}

TEST_CASE("random instances agree with the definition")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 3 + seed % 18;
        const auto p = test::random_points(n, seed);
        const auto t = build(p, seed);
        CAPTURE(seed);

        CHECK_FALSE(verify_delaunay(t));
        const std::size_t h = t.hull().size();
        CHECK(t.triangles().size() == 2 * n - 2 - h);
        CHECK(t.edges().size() == 3 * n - 3 - h);
        for (const auto& e : t.edges())
            if (t.kind(e) == EdgeKind::INTERIOR)
                CHECK(edge_angle_check(t, e) == AngleCheck::OK);
        check_witnesses(t);

        if (n <= 12)
            CHECK(test::sorted_faces(t) == test::brute_delaunay(p));

        // Uniqueness: permuting the input gives the same edge set.
        std::mt19937_64 rng(seed);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Point> permuted;
            for (int i : perm)
                permuted.push_back(p[static_cast<std::size_t>(i)]);
            const auto u = build(permuted, seed + 1000 + shuffle);
            std::set<Edge> mapped;
            for (const auto& e : u.edges())
                mapped.insert(Edge(perm[static_cast<std::size_t>(e.a)],
                                   perm[static_cast<std::size_t>(e.b)]));
            CHECK(mapped == test::edge_set(t));
        }
    }
}

TEST_CASE("build result does not depend on the insertion seed")
{
    const auto p = test::random_points(15, 99);
    const auto t = build(p, 0);
    for (std::uint64_t seed = 1; seed < 10; ++seed)
        CHECK(build(p, seed) == t);
}
