#include <dtough/blocking.hpp>
#include <dtough/structure.hpp>

#include <random>

namespace dtough {

namespace {

std::vector<Point> concat(const std::vector<Point>& a, const std::vector<Point>& b)
{
    std::vector<Point> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

BlockingVerdict verify_blocking(const std::vector<Point>& p,
                                const std::vector<Point>& b)
{
    if (p.size() < 2)
        throw PreconditionViolated("blocking needs at least two points in P");
    const auto all = concat(p, b);
    if (auto v = general_position(all))
        throw DegenerateInput(*v);
    if (all.size() == 2)
        return BlockingVerdict{false, Edge(0, 1)};

    const auto t = build(all);
    const int np = static_cast<int>(p.size());
    for (const auto& e : t.edges())
        if (e.b < np)
            return BlockingVerdict{false, e};
    return BlockingVerdict{true, std::nullopt};
}

LowerBoundReport lower_bound_report(const std::vector<Point>& p,
                                    const std::vector<Point>& b)
{
    const auto verdict = verify_blocking(p, b);
    LowerBoundReport r;
    r.blocked = verdict.blocked;
    r.witness = verdict.witness;
    if (!verdict.blocked)
        return r;

    // Blocked means every component of Del(P + B) - B is a single point of
    // P, so P is independent there; the independent-set bound then forces
    // |P| <= |P + B| / 2.
    const auto all = concat(p, b);
    const auto t = build(all);
    VertexSet ps(all.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        ps.insert(i);
    r.p_independent = is_independent(t, ps);
    r.size_ok = b.size() >= p.size();
    return r;
}

namespace {

// Rational point on the unit circle, (1 - s^2, 2 s) / (1 + s^2).
Point unit_circle_point(const Coord& s)
{
    const Coord d = 1 + s * s;
    return Point{Coord((1 - s * s) / d), Coord(2 * s / d)};
}

Point outward_normal(const Point& a, const Point& b, const Point& inside)
{
    const Point dir = b - a;
    Point n{dir.y, -dir.x};
    if (sgn(dot(n, inside - a)) > 0)
        n = Point{-dir.y, dir.x};
    return n;
}

bool is_fan(const Triangulation& t)
{
    return t.hull().size() == t.size() && t.neighbors(0).size() == t.size() - 1;
}

} // namespace

BlockingInstance fan_instance(int n, std::uint64_t seed)
{
    if (n < 4)
        throw PreconditionViolated("fan instance needs n >= 4");

    const int m = n - 1;
    std::mt19937_64 rng(seed);
    std::vector<Point> directions;
    std::vector<Coord> jitter;
    for (int i = 0; i < m; ++i) {
        // Tangent half-angles in [-3/4, 3/4]: the points span about 147
        // degrees around p.
        const Coord s = make_coord(-3, 4) + make_coord(3 * i, 2 * (m - 1));
        directions.push_back(unit_circle_point(s));
        jitter.push_back(make_coord(static_cast<long>(rng() % 2049) - 1024, 1024));
    }

    const Point origin(0, 0);
    Coord eps = make_coord(1, 8);
    Coord delta = make_coord(1, 8);
    for (int attempt = 0; attempt <= kMaxHalvings;
         ++attempt, eps /= 2, delta /= 2) {
        std::vector<Point> p{origin};
        for (int i = 0; i < m; ++i)
            p.push_back(Coord(1 + delta * jitter[static_cast<std::size_t>(i)]) *
                        directions[static_cast<std::size_t>(i)]);

        std::vector<Point> b;
        const Point& first = p[1];
        const Point& last = p[static_cast<std::size_t>(m)];
        // Next to p, just outside its two hull edges.
        for (const auto& [end, other] : {std::pair{first, last},
                                         std::pair{last, first}}) {
            const Point normal = outward_normal(origin, end, other);
            b.push_back(eps * end + Coord(eps * eps) * normal);
        }
        // Just outside the midpoint of every hull edge away from p.
        for (int i = 1; i < m; ++i) {
            const Point& a = p[static_cast<std::size_t>(i)];
            const Point& c = p[static_cast<std::size_t>(i + 1)];
            b.push_back(midpoint(a, c) + eps * outward_normal(a, c, origin));
        }

        if (general_position(concat(p, b)))
            continue;
        if (!is_fan(build(p)))
            continue;
        if (!verify_blocking(p, b).blocked)
            continue;
        return BlockingInstance{std::move(p), std::move(b), true, eps, delta};
    }
    throw ConstructionFailed("fan instance did not verify after " +
                             std::to_string(kMaxHalvings) + " halvings");
}

DisjointDiskInstance disjoint_disk_instance(int n)
{
    if (n < 2)
        throw PreconditionViolated("disjoint disk instance needs n >= 2");

    std::vector<Coord> xs;
    Coord x(0);
    Coord gap(1);
    for (int i = 0; i < n; ++i, x += gap, gap *= 3)
        xs.push_back(x);

    Coord flat = std::max(Coord(1), xs.back());
    for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, flat *= 2) {
        std::vector<Point> p;
        for (const auto& xi : xs)
            p.emplace_back(xi, Coord(xi * xi / flat));
        if (general_position(p))
            continue;

        // First disk: center a quarter normal outside the first edge; every
        // later center is where the line from the previous center through
        // the shared point meets the next bisector, so consecutive disks
        // touch exactly there.
        std::vector<Disk> disks;
        const Point inside = p.size() > 2 ? p[2] : p[0] + Point(0, 1);
        Point center = midpoint(p[0], p[1]) +
                       make_coord(1, 4) * outward_normal(p[0], p[1], inside);
        disks.push_back(Disk{center, dist_sq(center, p[0])});
        bool ok = true;
        for (std::size_t i = 1; i + 1 < p.size() && ok; ++i) {
            const Point& shared = p[i];
            const Point dir = shared - center;
            const Point edge = p[i + 1] - shared;
            const Coord s = dot(midpoint(shared, p[i + 1]) - shared, edge) /
                            dot(dir, edge);
            if (sgn(s) <= 0) {
                ok = false;
                break;
            }
            center = shared + s * dir;
            disks.push_back(Disk{center, dist_sq(center, shared)});
        }
        if (!ok)
            continue;

        for (std::size_t i = 0; i < disks.size() && ok; ++i)
            for (std::size_t v = 0; v < p.size() && ok; ++v) {
                const DiskSide side = disk_classify(disks[i], p[v]);
                ok = (v == i || v == i + 1) ? side == DiskSide::BOUNDARY
                                            : side == DiskSide::EXTERIOR;
            }
        if (!ok)
            continue;
        if (p.size() >= 3) {
            const auto t = build(p);
            for (int i = 0; i + 1 < n && ok; ++i)
                ok = t.has_edge(i, i + 1);
            if (!ok)
                continue;
        }

        bool disjoint = true;
        for (std::size_t i = 0; i < disks.size(); ++i)
            for (std::size_t j = i + 1; j < disks.size(); ++j)
                disjoint = disjoint && interiors_disjoint(disks[i], disks[j]);
        if (!disjoint)
            continue;
        return DisjointDiskInstance{std::move(p), std::move(disks), true, flat};
    }
    throw ConstructionFailed("disjoint disk instance did not verify");
}

} // namespace dtough
