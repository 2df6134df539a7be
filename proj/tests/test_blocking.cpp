#include "test_support.hpp"

#include <dtough/blocking.hpp>
#include <dtough/structure.hpp>

#include <doctest.h>

using namespace dtough;
using dtough::test::pts;

TEST_CASE("fan instances are blocked and tight")
{
    for (int n = 4; n <= 10; ++n) {
        CAPTURE(n);
        auto inst = fan_instance(n, 1);
        CHECK(inst.verified);
        CHECK(inst.p.size() == static_cast<std::size_t>(n));
        CHECK(inst.b.size() == static_cast<std::size_t>(n));
        auto r = lower_bound_report(inst.p, inst.b);
        CHECK(r.blocked);
        CHECK(r.p_independent == true);
        CHECK(r.size_ok == true);
        CHECK_FALSE(r.alarm());
    }
}

TEST_CASE("fan instances do not depend on the seed for their shape")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = fan_instance(7, seed);
        CHECK(verify_blocking(inst.p, inst.b).blocked);
        CHECK(max_independent_set(build(inst.p)).size == 3);
    }
    CHECK(max_independent_set(build(fan_instance(10, 3).p)).size == 5);
}

TEST_CASE("removing a hull-edge blocker unblocks that edge")
{
    for (int n = 4; n <= 10; ++n) {
        auto inst = fan_instance(n, 1);
        const int m = n - 1;
        for (int i = 1; i < m; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            auto b = inst.b;
            b.erase(b.begin() + 1 + i);
            auto v = verify_blocking(inst.p, b);
            CHECK_FALSE(v.blocked);
            REQUIRE(v.witness);
            CHECK(*v.witness == Edge(i, i + 1));
        }
        for (int k = 0; k < 2; ++k) {
            auto b = inst.b;
            b.erase(b.begin() + k);
            auto v = verify_blocking(inst.p, b);
            CHECK_FALSE(v.blocked);
            CHECK(v.witness.has_value());
        }
    }
}

TEST_CASE("empty blocker set")
{
    auto p = test::random_points(6, 2);
    auto r = lower_bound_report(p, {});
    CHECK_FALSE(r.blocked);
    CHECK(r.witness.has_value());
    CHECK_FALSE(r.p_independent.has_value());
    CHECK_FALSE(r.alarm());
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(fan_instance(3), PreconditionViolated);
    CHECK_THROWS_AS(verify_blocking(pts({{0, 0}}), {}), PreconditionViolated);
    CHECK_THROWS_AS(verify_blocking(pts({{0, 0}, {2, 2}}), pts({{1, 1}})),
                    DegenerateInput);
    CHECK_THROWS_AS(disjoint_disk_instance(1), PreconditionViolated);
}

TEST_CASE("two points cannot be blocked by one")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = pts({{0, 0}, {1000, 0}});
        Point b(static_cast<long>(rng() % 1401) - 200,
                static_cast<long>(rng() % 801) - 400);
        if (!extends_general_position(p, b))
            continue;
        CHECK_FALSE(verify_blocking(p, {b}).blocked);
    }
}

TEST_CASE("disjoint disk chain")
{
    for (int n : {2, 5, 8}) {
        CAPTURE(n);
        auto inst = disjoint_disk_instance(n);
        CHECK(inst.pairwise_disjoint);
        REQUIRE(inst.disks.size() == static_cast<std::size_t>(n - 1));
        const bool triangulated = n >= 3;
        for (int i = 0; i + 1 < n; ++i) {
            if (triangulated)
                CHECK(build(inst.p).has_edge(i, i + 1));
            const Disk& d = inst.disks[static_cast<std::size_t>(i)];
            for (int v = 0; v < n; ++v) {
                const DiskSide expected =
                    (v == i || v == i + 1) ? DiskSide::BOUNDARY : DiskSide::EXTERIOR;
                CHECK(disk_classify(d, inst.p[static_cast<std::size_t>(v)]) == expected);
            }
        }
        for (std::size_t i = 0; i < inst.disks.size(); ++i)
            for (std::size_t j = i + 1; j < inst.disks.size(); ++j)
                CHECK(interiors_disjoint(inst.disks[i], inst.disks[j]));
    }
    // Fewer than n blockers, one just below each of the first chords.
    auto inst = disjoint_disk_instance(8);
    std::vector<Point> b;
    for (int i = 0; i + 1 < 7; ++i)
        b.push_back(midpoint(inst.p[static_cast<std::size_t>(i)],
                             inst.p[static_cast<std::size_t>(i + 1)]) +
                    Point(test::q(0), test::q(-1, 1024)));
    auto r = lower_bound_report(inst.p, b);
    CHECK_FALSE(r.alarm());
    CHECK_FALSE(r.blocked);
}
