#include <dtough/delaunay.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace dtough {

DegenerateInput::DegenerateInput(GeneralPositionViolation v)
    : Error(std::string("input not in general position: ") + to_string(v.kind))
    , violation(std::move(v))
{}

namespace {

Triangle canonical(const Triangle& t)
{
    auto it = std::min_element(t.begin(), t.end());
    auto k = static_cast<std::size_t>(it - t.begin());
    return {t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
}

} // namespace

Triangulation::Triangulation(std::vector<Point> vertices,
                             std::vector<Triangle> triangles)
    : vertices_(std::move(vertices))
    , triangles_(std::move(triangles))
{
    const int n = static_cast<int>(vertices_.size());
    if (n < 3)
        throw TooFewPoints(vertices_.size());

    for (auto& t : triangles_) {
        for (int v : t)
            if (v < 0 || v >= n)
                throw InvariantBroken("triangle vertex out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw InvariantBroken("triangle with repeated vertex");
        if (orient(vertex(t[0]), vertex(t[1]), vertex(t[2])) !=
            Orientation::CCW)
            throw InvariantBroken("triangle not CCW");
        t = canonical(t);
    }
    std::sort(triangles_.begin(), triangles_.end());

    // Directed edges u->v; a boundary edge has no reverse twin.
    std::map<std::pair<int, int>, int> directed;
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        const auto& t = triangles_[i];
        for (int k = 0; k < 3; ++k) {
            auto key = std::make_pair(t[k], t[(k + 1) % 3]);
            if (!directed.emplace(key, static_cast<int>(i)).second)
                throw InvariantBroken("directed edge used twice");
            adjacency_[Edge(key.first, key.second)].push_back(
                static_cast<int>(i));
        }
    }

    std::map<int, int> hull_next;
    for (const auto& [key, tri] : directed) {
        if (!directed.count({key.second, key.first})) {
            if (!hull_next.emplace(key.first, key.second).second)
                throw InvariantBroken("hull is not a simple cycle");
        }
    }
    if (hull_next.empty())
        throw InvariantBroken("no boundary edges");
    int start = hull_next.begin()->first;
    int cur = start;
    do {
        hull_.push_back(cur);
        auto it = hull_next.find(cur);
        if (it == hull_next.end() || hull_.size() > hull_next.size())
            throw InvariantBroken("hull is not a simple cycle");
        cur = it->second;
    } while (cur != start);
    if (hull_.size() != hull_next.size())
        throw InvariantBroken("boundary splits into several cycles");

    const std::size_t h = hull_.size();
    for (std::size_t i = 0; i < h; ++i) {
        if (orient(vertex(hull_[i]), vertex(hull_[(i + 1) % h]),
                   vertex(hull_[(i + 2) % h])) != Orientation::CCW)
            throw InvariantBroken("hull is not convex");
    }

    const std::size_t un = vertices_.size();
    if (triangles_.size() != 2 * un - 2 - h)
        throw InvariantBroken("face count violates Euler's formula");
    if (adjacency_.size() != 3 * un - 3 - h)
        throw InvariantBroken("edge count violates Euler's formula");

    neighbors_.assign(un, {});
    for (const auto& [e, tris] : adjacency_) {
        edges_.push_back(e);
        neighbors_[static_cast<std::size_t>(e.a)].push_back(e.b);
        neighbors_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& nb : neighbors_) {
        if (nb.empty())
            throw InvariantBroken("isolated vertex");
        std::sort(nb.begin(), nb.end());
    }
    on_hull_.assign(un, false);
    for (int v : hull_)
        on_hull_[static_cast<std::size_t>(v)] = true;
}

bool Triangulation::has_edge(int u, int v) const
{
    return u != v && adjacency_.count(Edge(u, v)) != 0;
}

const std::vector<int>& Triangulation::incident_triangles(const Edge& e) const
{
    auto it = adjacency_.find(e);
    if (it == adjacency_.end())
        throw NotAnEdge();
    return it->second;
}

EdgeKind Triangulation::kind(const Edge& e) const
{
    return incident_triangles(e).size() == 2 ? EdgeKind::INTERIOR
                                             : EdgeKind::BOUNDARY;
}

std::vector<int> Triangulation::apexes(const Edge& e) const
{
    std::vector<int> out;
    for (int ti : incident_triangles(e)) {
        for (int v : triangles_[static_cast<std::size_t>(ti)])
            if (v != e.a && v != e.b)
                out.push_back(v);
    }
    return out;
}

std::size_t Triangulation::interior_edge_count() const
{
    return edges_.size() - hull_.size();
}

namespace {

// Mutable mesh used during construction. nb[i] is the face across the edge
// opposite v[i], or -1 on the hull.
struct Face
{
    std::array<int, 3> v;
    std::array<int, 3> nb;
};

class Builder
{
public:
    explicit Builder(std::span<const Point> pts) : pts_(pts) {}

    void seed_triangle(int a, int b, int c)
    {
        if (orient(pt(a), pt(b), pt(c)) == Orientation::CW)
            std::swap(b, c);
        faces_.push_back({{a, b, c}, {-1, -1, -1}});
    }

    void insert(int p)
    {
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            if (contains(faces_[f], p)) {
                split(static_cast<int>(f), p);
                legalize(p);
                return;
            }
        }
        extend_hull(p);
        legalize(p);
    }

    std::vector<Triangle> triangles() const
    {
        std::vector<Triangle> out;
        out.reserve(faces_.size());
        for (const auto& f : faces_)
            out.push_back(f.v);
        return out;
    }

private:
    const Point& pt(int i) const { return pts_[static_cast<std::size_t>(i)]; }
    Face& face(int f) { return faces_[static_cast<std::size_t>(f)]; }

    bool contains(const Face& f, int p) const
    {
        for (int k = 0; k < 3; ++k)
            if (orient(pt(f.v[k]), pt(f.v[(k + 1) % 3]), pt(p)) !=
                Orientation::CCW)
                return false;
        return true;
    }

    void replace_neighbor(int f, int from, int to)
    {
        if (f < 0)
            return;
        for (int& n : face(f).nb)
            if (n == from) {
                n = to;
                return;
            }
    }

    void split(int f, int p)
    {
        Face old = face(f);
        const auto [a, b, c] = old.v;
        const auto [na, nb, nc] = old.nb;
        const int f1 = static_cast<int>(faces_.size());
        const int f2 = f1 + 1;
        face(f) = {{a, b, p}, {f1, f2, nc}};
        faces_.push_back({{b, c, p}, {f2, f, na}});
        faces_.push_back({{c, a, p}, {f, f1, nb}});
        replace_neighbor(na, f, f1);
        replace_neighbor(nb, f, f2);
        stack_ = {f, f1, f2};
    }

    void extend_hull(int p)
    {
        // Hull edges a->b (interior on the left) that see p.
        std::vector<std::pair<int, int>> visible;
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            for (int k = 0; k < 3; ++k) {
                if (faces_[f].nb[static_cast<std::size_t>(k)] != -1)
                    continue;
                int a = faces_[f].v[static_cast<std::size_t>((k + 1) % 3)];
                int b = faces_[f].v[static_cast<std::size_t>((k + 2) % 3)];
                if (orient(pt(a), pt(b), pt(p)) == Orientation::CW)
                    visible.emplace_back(static_cast<int>(f), k);
            }
        }
        if (visible.empty())
            throw InvariantBroken("point neither inside nor outside the hull");

        stack_.clear();
        std::map<int, std::pair<int, int>> pending; // hull vertex -> (face, slot)
        for (auto [f, k] : visible) {
            const int a = face(f).v[static_cast<std::size_t>((k + 1) % 3)];
            const int b = face(f).v[static_cast<std::size_t>((k + 2) % 3)];
            const int nf = static_cast<int>(faces_.size());
            faces_.push_back({{b, a, p}, {-1, -1, f}});
            face(f).nb[static_cast<std::size_t>(k)] = nf;
            // Slot 0 faces edge (a, p), slot 1 faces edge (p, b).
            for (auto [key, slot] : {std::pair{a, 0}, std::pair{b, 1}}) {
                auto it = pending.find(key);
                if (it == pending.end()) {
                    pending.emplace(key, std::pair{nf, slot});
                } else {
                    auto [of, oslot] = it->second;
                    face(nf).nb[static_cast<std::size_t>(slot)] = of;
                    face(of).nb[static_cast<std::size_t>(oslot)] = nf;
                    pending.erase(it);
                }
            }
            stack_.push_back(nf);
        }
    }

    // Lawson flips of the edges opposite p until all are locally Delaunay.
    void legalize(int p)
    {
        while (!stack_.empty()) {
            const int t = stack_.back();
            stack_.pop_back();
            const auto i = index_of(face(t), p);
            const int u = face(t).nb[i];
            if (u < 0)
                continue;
            Face& tf = face(t);
            Face& uf = face(u);
            std::size_t j = 0;
            const int a = tf.v[(i + 1) % 3];
            const int b = tf.v[(i + 2) % 3];
            while (uf.v[j] == a || uf.v[j] == b)
                ++j;
            const int d = uf.v[j];
            if (in_circle(pt(tf.v[0]), pt(tf.v[1]), pt(tf.v[2]), pt(d)) !=
                CircleSide::INSIDE)
                continue;

            const int t_na = tf.nb[(i + 1) % 3];
            const int t_nb = tf.nb[(i + 2) % 3];
            const int u_nb = uf.nb[(j + 1) % 3];
            const int u_na = uf.nb[(j + 2) % 3];
            tf = {{p, a, d}, {u_nb, u, t_nb}};
            uf = {{p, d, b}, {u_na, t_na, t}};
            replace_neighbor(u_nb, u, t);
            replace_neighbor(t_na, t, u);
            stack_.push_back(t);
            stack_.push_back(u);
        }
    }

    static std::size_t index_of(const Face& f, int v)
    {
        for (std::size_t k = 0; k < 3; ++k)
            if (f.v[k] == v)
                return k;
        throw InvariantBroken("vertex missing from face");
    }

    std::span<const Point> pts_;
    std::vector<Face> faces_;
    std::vector<int> stack_;
};

bool is_witness(const Triangulation& t, const Edge& e, const Disk& d)
{
    for (int v = 0; v < static_cast<int>(t.size()); ++v) {
        DiskSide side = disk_classify(d, t.vertex(v));
        bool endpoint = v == e.a || v == e.b;
        if (endpoint ? side != DiskSide::BOUNDARY : side != DiskSide::EXTERIOR)
            return false;
    }
    return true;
}

// Dyadic parameters in (0, 1), breadth first: 1/2, 1/4, 3/4, 1/8, ...
std::vector<Coord> dyadic_parameters(std::size_t count)
{
    std::vector<Coord> out;
    for (long den = 2; out.size() < count; den *= 2)
        for (long num = 1; num < den && out.size() < count; num += 2)
            out.push_back(make_coord(num, den));
    return out;
}

constexpr std::size_t kWitnessSteps = 32;

} // namespace

Triangulation build(std::span<const Point> points, std::uint64_t seed)
{
    if (points.size() < 3)
        throw TooFewPoints(points.size());
    if (auto v = general_position(points))
        throw DegenerateInput(*v);

    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    Builder builder(points);
    builder.seed_triangle(order[0], order[1], order[2]);
    for (std::size_t i = 3; i < order.size(); ++i)
        builder.insert(order[i]);

    return Triangulation(std::vector<Point>(points.begin(), points.end()),
                         builder.triangles());
}

std::optional<DelaunayCounterExample> verify_delaunay(const Triangulation& t)
{
    const auto& tris = t.triangles();
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& tri = tris[i];
        for (int v = 0; v < static_cast<int>(t.size()); ++v) {
            if (v == tri[0] || v == tri[1] || v == tri[2])
                continue;
            if (in_circle(t.vertex(tri[0]), t.vertex(tri[1]),
                          t.vertex(tri[2]), t.vertex(v)) != CircleSide::OUTSIDE)
                return DelaunayCounterExample{static_cast<int>(i), v};
        }
    }
    return std::nullopt;
}

AngleCheck edge_angle_check(const Triangulation& t, const Edge& e)
{
    if (t.kind(e) != EdgeKind::INTERIOR)
        throw NotInteriorEdge();
    const auto& face = t.triangles()[static_cast<std::size_t>(
        t.incident_triangles(e).front())];
    const auto apex = t.apexes(e);
    const int s = apex[1];
    return in_circle(t.vertex(face[0]), t.vertex(face[1]), t.vertex(face[2]),
                     t.vertex(s)) == CircleSide::OUTSIDE
               ? AngleCheck::OK
               : AngleCheck::VIOLATED;
}

Disk witness_disk(const Triangulation& t, const Edge& e)
{
    const auto& incident = t.incident_triangles(e);
    const Point& p = t.vertex(e.a);
    auto face_disk = [&](int ti) {
        const auto& f = t.triangles()[static_cast<std::size_t>(ti)];
        return circumdisk(t.vertex(f[0]), t.vertex(f[1]), t.vertex(f[2]));
    };
    auto disk_at = [&](const Point& center) {
        return Disk{center, dist_sq(center, p)};
    };

    if (incident.size() == 2) {
        // Any center strictly between the two circumcenters works.
        const Point c1 = face_disk(incident[0]).center;
        const Point c2 = face_disk(incident[1]).center;
        for (const auto& s : dyadic_parameters(kWitnessSteps)) {
            Disk d = disk_at(c1 + s * (c2 - c1));
            if (is_witness(t, e, d))
                return d;
        }
        throw WitnessSearchFailed();
    }

    const Point c = face_disk(incident[0]).center;
    const Point m = midpoint(t.vertex(e.a), t.vertex(e.b));
    Disk halfway = disk_at(c + make_coord(1, 2) * (m - c));
    if (is_witness(t, e, halfway))
        return halfway;

    // Halfway toward the edge midpoint fails when the opposite angle is
    // right or obtuse; moving the center outward past the circumcenter
    // always works, since the disk then shrinks on the hull side.
    const int r = t.apexes(e).front();
    const Point dir = t.vertex(e.b) - p;
    Point outward{dir.y, -dir.x};
    if (sgn(dot(outward, m - t.vertex(r))) < 0)
        outward = Point{-dir.y, dir.x};
    Coord step = make_coord(1, 2);
    for (std::size_t i = 0; i < kWitnessSteps; ++i, step /= 2) {
        Disk d = disk_at(c + step * outward);
        if (is_witness(t, e, d))
            return d;
    }
    throw WitnessSearchFailed();
}

Triangulation flip(const Triangulation& t, const Edge& e)
{
    if (t.kind(e) != EdgeKind::INTERIOR)
        throw NotInteriorEdge();
    const auto& incident = t.incident_triangles(e);
    // Orient so that (p, q, r) is CCW; s is then on the other side.
    const auto& f0 = t.triangles()[static_cast<std::size_t>(incident[0])];
    int p = -1;
    int q = -1;
    int r = -1;
    for (std::size_t k = 0; k < 3; ++k) {
        if (f0[k] != e.a && f0[k] != e.b) {
            r = f0[k];
            p = f0[(k + 1) % 3];
            q = f0[(k + 2) % 3];
        }
    }
    const int s = t.apexes(e)[1];
    std::vector<Triangle> tris;
    for (std::size_t i = 0; i < t.triangles().size(); ++i)
        if (static_cast<int>(i) != incident[0] &&
            static_cast<int>(i) != incident[1])
            tris.push_back(t.triangles()[i]);
    tris.push_back({p, s, r});
    tris.push_back({s, q, r});
    return Triangulation(t.vertices(), std::move(tris));
}

bool edges_included(const Triangulation& sub, const Triangulation& super,
                    std::span<const int> index_map)
{
    for (const auto& e : sub.edges()) {
        if (!super.has_edge(index_map[static_cast<std::size_t>(e.a)],
                            index_map[static_cast<std::size_t>(e.b)]))
            return false;
    }
    return true;
}

} // namespace dtough
