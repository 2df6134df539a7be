#include <dtough/structure.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <future>
#include <map>
#include <numbers>
#include <numeric>

namespace dtough {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<int> members)
    : bits_(universe, false)
{
    for (int v : members)
        insert(v);
}

VertexSet VertexSet::from_indices(std::size_t universe,
                                  const std::vector<int>& members)
{
    VertexSet s(universe);
    for (int v : members)
        s.insert(v);
    return s;
}

bool VertexSet::contains(int v) const
{
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() &&
           bits_[static_cast<std::size_t>(v)];
}

void VertexSet::insert(int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= bits_.size())
        throw PreconditionViolated("vertex index out of range");
    bits_[static_cast<std::size_t>(v)] = true;
}

void VertexSet::erase(int v)
{
    if (v >= 0 && static_cast<std::size_t>(v) < bits_.size())
        bits_[static_cast<std::size_t>(v)] = false;
}

std::size_t VertexSet::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i])
            out.push_back(static_cast<int>(i));
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet c(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        c.bits_[i] = !bits_[i];
    return c;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Triangulation& t)
{
    std::vector<Mask> adj(t.size(), 0);
    for (const auto& e : t.edges()) {
        adj[static_cast<std::size_t>(e.a)] |= Mask{1} << e.b;
        adj[static_cast<std::size_t>(e.b)] |= Mask{1} << e.a;
    }
    return adj;
}

int count_components(const std::vector<Mask>& adj, Mask remaining)
{
    int count = 0;
    while (remaining) {
        Mask comp = remaining & (~remaining + 1);
        Mask frontier = comp;
        while (frontier) {
            Mask grow = 0;
            for (Mask f = frontier; f; f &= f - 1)
                grow |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            frontier = grow & remaining & ~comp;
            comp |= frontier;
        }
        remaining &= ~comp;
        ++count;
    }
    return count;
}

struct ToughnessCandidate
{
    Mask set = 0;
    int size = 0;
    int components = 0;
    bool found = false;

    // Strictly better ratio size / components.
    bool better_than(const ToughnessCandidate& o) const
    {
        if (!o.found)
            return found;
        return found && static_cast<long>(size) * o.components <
                            static_cast<long>(o.size) * components;
    }
};

ToughnessCandidate scan_toughness(const std::vector<Mask>& adj, Mask full,
                                  Mask first, Mask last, bool descending)
{
    ToughnessCandidate best;
    // Visits [first, last] ascending or descending.
    Mask m = descending ? last : first;
    while (true) {
        const Mask remaining = full & ~m;
        if (remaining) {
            const int comps = count_components(adj, remaining);
            if (comps >= 2) {
                ToughnessCandidate c{m, std::popcount(m), comps, true};
                if (c.better_than(best))
                    best = c;
            }
        }
        if (descending ? m == first : m == last)
            break;
        descending ? --m : ++m;
    }
    return best;
}

} // namespace

std::vector<std::vector<int>> components_after_removal(const Triangulation& t,
                                                       const VertexSet& s)
{
    const std::size_t n = t.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < static_cast<int>(n); ++start) {
        if (s.contains(start) || seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int w : t.neighbors(v)) {
                if (s.contains(w) || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<Toughness> toughness_exhaustive(const Triangulation& t,
                                              EnumerationOrder order,
                                              unsigned threads,
                                              std::size_t limit)
{
    const std::size_t n = t.size();
    if (n > limit || n > 40)
        throw TooLarge(n, std::min<std::size_t>(limit, 40));

    const auto adj = adjacency_masks(t);
    const Mask full = (Mask{1} << n) - 1;
    const bool descending = order == EnumerationOrder::DESCENDING;
    const Mask first = 1;
    const Mask last = full - 1; // S = V leaves nothing

    threads = std::max(1u, threads);
    const Mask span = last - first + 1;
    if (span < threads)
        threads = 1;

    // Chunks listed in enumeration order; ties go to the earliest chunk.
    std::vector<std::pair<Mask, Mask>> chunks;
    for (unsigned i = 0; i < threads; ++i) {
        Mask lo = first + span * i / threads;
        Mask hi = first + span * (i + 1) / threads - 1;
        chunks.emplace_back(lo, hi);
    }
    if (descending)
        std::reverse(chunks.begin(), chunks.end());

    std::vector<ToughnessCandidate> results(chunks.size());
    if (chunks.size() == 1) {
        results[0] = scan_toughness(adj, full, chunks[0].first,
                                    chunks[0].second, descending);
    } else {
        std::vector<std::future<ToughnessCandidate>> futures;
        for (auto [lo, hi] : chunks)
            futures.push_back(std::async(std::launch::async, scan_toughness,
                                         std::cref(adj), full, lo, hi,
                                         descending));
        for (std::size_t i = 0; i < futures.size(); ++i)
            results[i] = futures[i].get();
    }

    ToughnessCandidate best;
    for (const auto& r : results)
        if (r.better_than(best))
            best = r;
    if (!best.found)
        return std::nullopt;

    VertexSet witness(n);
    for (Mask m = best.set; m; m &= m - 1)
        witness.insert(std::countr_zero(m));
    Coord ratio(best.size, best.components);
    ratio.canonicalize();
    return Toughness{ratio, witness, static_cast<std::size_t>(best.components)};
}

bool is_independent(const Triangulation& t, const VertexSet& s)
{
    for (const auto& e : t.edges())
        if (s.contains(e.a) && s.contains(e.b))
            return false;
    return true;
}

namespace {

class MisSearch
{
public:
    explicit MisSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    Mask run(Mask candidates)
    {
        recurse(candidates, 0);
        return best_set_;
    }

private:
    void recurse(Mask cand, Mask chosen)
    {
        const int chosen_size = std::popcount(chosen);
        if (chosen_size + std::popcount(cand) <= best_size_)
            return;
        // A vertex of degree <= 1 in the candidate graph belongs to some
        // maximum independent set, so take it without branching.
        while (cand) {
            int pick = -1;
            for (Mask c = cand; c; c &= c - 1) {
                int v = std::countr_zero(c);
                if (std::popcount(adj_[static_cast<std::size_t>(v)] & cand) <= 1) {
                    pick = v;
                    break;
                }
            }
            if (pick < 0)
                break;
            chosen |= Mask{1} << pick;
            cand &= ~((Mask{1} << pick) | adj_[static_cast<std::size_t>(pick)]);
        }
        if (!cand) {
            if (std::popcount(chosen) > best_size_) {
                best_size_ = std::popcount(chosen);
                best_set_ = chosen;
            }
            return;
        }
        if (std::popcount(chosen) + std::popcount(cand) <= best_size_)
            return;

        int pivot = -1;
        int pivot_degree = -1;
        for (Mask c = cand; c; c &= c - 1) {
            int v = std::countr_zero(c);
            int d = std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        const Mask bit = Mask{1} << pivot;
        recurse(cand & ~(bit | adj_[static_cast<std::size_t>(pivot)]),
                chosen | bit);
        recurse(cand & ~bit, chosen);
    }

    std::vector<Mask> adj_;
    int best_size_ = -1;
    Mask best_set_ = 0;
};

} // namespace

IndependentSet max_independent_set(const Triangulation& t, std::size_t limit)
{
    const std::size_t n = t.size();
    if (n > limit || n > 64)
        throw TooLarge(n, std::min<std::size_t>(limit, 64));
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    const Mask best = MisSearch(adjacency_masks(t)).run(full);
    VertexSet cert(n);
    for (Mask m = best; m; m &= m - 1)
        cert.insert(std::countr_zero(m));
    return IndependentSet{cert.count(), cert};
}

namespace {

// Edmonds' blossom algorithm, O(V^3).
class Blossom
{
public:
    Blossom(std::size_t n, const std::vector<Edge>& edges)
        : n_(static_cast<int>(n))
        , adj_(n)
        , match_(n, -1)
        , parent_(n)
        , base_(n)
        , used_(n)
        , blossom_(n)
    {
        for (const auto& e : edges) {
            adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
            adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
        }
        for (auto& a : adj_)
            std::sort(a.begin(), a.end());
    }

    Matching run()
    {
        for (int v = 0; v < n_; ++v) {
            if (at(match_, v) != -1)
                continue;
            int u = find_path(v);
            while (u != -1) {
                const int pv = at(parent_, u);
                const int next = at(match_, pv);
                at(match_, u) = pv;
                at(match_, pv) = u;
                u = next;
            }
        }
        Matching out;
        for (int v = 0; v < n_; ++v)
            if (at(match_, v) > v)
                out.emplace_back(v, at(match_, v));
        return out;
    }

private:
    template <typename T>
    static T& at(std::vector<T>& vec, int i)
    {
        return vec[static_cast<std::size_t>(i)];
    }

    int lca(int a, int b)
    {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        while (true) {
            a = at(base_, a);
            seen[static_cast<std::size_t>(a)] = true;
            if (at(match_, a) == -1)
                break;
            a = at(parent_, at(match_, a));
        }
        while (true) {
            b = at(base_, b);
            if (seen[static_cast<std::size_t>(b)])
                return b;
            b = at(parent_, at(match_, b));
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (at(base_, v) != b) {
            at(blossom_, at(base_, v)) = true;
            at(blossom_, at(base_, at(match_, v))) = true;
            at(parent_, v) = child;
            child = at(match_, v);
            v = at(parent_, at(match_, v));
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i)
            at(base_, i) = i;
        at(used_, root) = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (at(base_, v) == at(base_, to) || at(match_, v) == to)
                    continue;
                if (to == root ||
                    (at(match_, to) != -1 && at(parent_, at(match_, to)) != -1)) {
                    const int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!at(blossom_, at(base_, i)))
                            continue;
                        at(base_, i) = cur;
                        if (!at(used_, i)) {
                            at(used_, i) = true;
                            queue.push_back(i);
                        }
                    }
                } else if (at(parent_, to) == -1) {
                    at(parent_, to) = v;
                    if (at(match_, to) == -1)
                        return to;
                    at(used_, at(match_, to)) = true;
                    queue.push_back(at(match_, to));
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
};

} // namespace

Matching maximum_matching(std::size_t n, const std::vector<Edge>& edges)
{
    return Blossom(n, edges).run();
}

std::optional<Matching> perfect_matching(const Triangulation& t)
{
    if (t.size() % 2 != 0)
        return std::nullopt;
    Matching m = maximum_matching(t.size(), t.edges());
    if (m.size() * 2 != t.size())
        return std::nullopt;
    return m;
}

std::optional<Matching> perfect_matching(std::span<const Point> points)
{
    if (points.empty())
        return Matching{};
    if (points.size() == 2) {
        if (points[0] == points[1])
            throw DegenerateInput(GeneralPositionViolation{
                GeneralPositionViolation::Kind::DUPLICATE, {0, 1}});
        return Matching{Edge(0, 1)};
    }
    if (points.size() < 3)
        return std::nullopt;
    return perfect_matching(build(points));
}

namespace {

bool strictly_inside(const Point& a, const Point& b, const Point& c,
                     const Point& x)
{
    const Orientation o = orient(a, b, c);
    return orient(a, b, x) == o && orient(b, c, x) == o && orient(c, a, x) == o;
}

// sqrt(x) <= (x + 1) / 2 gives a rational upper bound on a length.
Coord length_bound(const Coord& squared)
{
    return (squared + 1) / 2;
}

Coord pow2(int k)
{
    Coord r(1);
    for (int i = 0; i < k; ++i)
        r *= 2;
    return r;
}

} // namespace

SentinelAugmentation sentinel_augment(const Triangulation& t,
                                      const VertexSet& s)
{
    const auto& hull = t.hull();
    const std::size_t h = hull.size();
    std::size_t pos = h;
    for (std::size_t i = 0; i < h; ++i)
        if (s.contains(hull[i])) {
            pos = i;
            break;
        }
    if (pos == h)
        throw PreconditionViolated("S contains no hull vertex");

    const int u = hull[pos];
    const Point& up = t.vertex(u);
    const Point& prev = t.vertex(hull[(pos + h - 1) % h]);
    const Point& next = t.vertex(hull[(pos + 1) % h]);

    // Outward normals of the two hull edges at u; their sum points strictly
    // into the normal cone at u.
    const Point d1 = up - prev;
    const Point d2 = next - up;
    Point normal = Point{d1.y, -d1.x} + Point{d2.y, -d2.x};
    const Coord ax = abs(normal.x);
    const Coord ay = abs(normal.y);
    const Coord scale = std::max(ax, ay);
    normal = Coord(1 / scale) * normal;
    const Point tangent{-normal.y, normal.x};

    // The wedge at u spanned by v and w must contain the hull cone at u:
    // b / a > |t.d| / (-n.d) for both hull directions d.
    Coord ratio(1);
    for (const Point& d : {prev - up, next - up}) {
        const Coord along = -dot(normal, d);
        const Coord across = abs(dot(tangent, d));
        ratio = std::max(ratio, Coord(2 * across / along + 1));
    }

    std::vector<Disk> face_disks;
    Coord reach(1);
    for (const auto& f : t.triangles()) {
        Disk d = circumdisk(t.vertex(f[0]), t.vertex(f[1]), t.vertex(f[2]));
        reach = std::max(reach, Coord(length_bound(dist_sq(d.center, up)) +
                                      length_bound(d.radius_sq)));
        face_disks.push_back(std::move(d));
    }

    const int n = static_cast<int>(t.size());
    std::vector<int> identity(t.size());
    std::iota(identity.begin(), identity.end(), 0);

    for (int k = 0; k < 64; ++k) {
        const Coord along = 4 * reach * pow2(k);
        const Coord across = ratio * along;
        const Point base = up - along * normal;
        Point v = base + across * tangent;
        const Point w = base - across * tangent;
        if (k > 0)
            v.y += Coord(1) / pow2(k);

        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (x != u && !strictly_inside(up, v, w, t.vertex(x)))
                ok = false;
        for (const auto& d : face_disks) {
            if (!ok)
                break;
            ok = disk_classify(d, v) == DiskSide::EXTERIOR &&
                 disk_classify(d, w) == DiskSide::EXTERIOR;
        }
        if (!ok)
            continue;

        std::vector<Point> all = t.vertices();
        if (!extends_general_position(all, v))
            continue;
        all.push_back(v);
        if (!extends_general_position(all, w))
            continue;
        all.push_back(w);

        Triangulation augmented = build(all);
        if (!edges_included(t, augmented, identity))
            continue;
        if (augmented.hull().size() != 3)
            continue;
        return SentinelAugmentation{std::move(augmented), u, v, w};
    }
    throw SearchExhausted("no sentinel placement verified after 64 doublings");
}

namespace {

// Neighbors of x inside the induced subgraph, sorted counterclockwise by
// direction using exact comparisons.
std::vector<int> rotation(const Triangulation& t, int x,
                          const std::vector<bool>& keep)
{
    std::vector<int> out;
    for (int y : t.neighbors(x))
        if (keep[static_cast<std::size_t>(y)])
            out.push_back(y);
    const Point& c = t.vertex(x);
    auto half = [](const Point& d) {
        return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1;
    };
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        const Point da = t.vertex(a) - c;
        const Point db = t.vertex(b) - c;
        const int ha = half(da);
        const int hb = half(db);
        if (ha != hb)
            return ha < hb;
        return sgn(cross(da, db)) > 0;
    });
    return out;
}

// Winding number of polygon around x; x is assumed off the boundary.
int winding(const Triangulation& t, const std::vector<int>& cycle, const Point& x)
{
    int wn = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point& a = t.vertex(cycle[i]);
        const Point& b = t.vertex(cycle[(i + 1) % cycle.size()]);
        if (a.y <= x.y) {
            if (b.y > x.y && orient(a, b, x) == Orientation::CCW)
                ++wn;
        } else if (b.y <= x.y && orient(a, b, x) == Orientation::CW) {
            --wn;
        }
    }
    return wn;
}

double angle_degrees(const Point& apex, const Point& p, const Point& q)
{
    const double ax = to_double(p.x - apex.x);
    const double ay = to_double(p.y - apex.y);
    const double bx = to_double(q.x - apex.x);
    const double by = to_double(q.y - apex.y);
    return std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by) * 180.0 /
           std::numbers::pi;
}

} // namespace

AuditReport angle_audit(const Triangulation& t, const VertexSet& independent)
{
    if (independent.universe() != t.size())
        throw PreconditionViolated("vertex set universe does not match");
    for (const auto& e : t.edges())
        if (independent.contains(e.a) && independent.contains(e.b))
            throw NotIndependent(e.a, e.b);

    const int n = static_cast<int>(t.size());
    auto aug = sentinel_augment(t, independent.complement());
    const Triangulation& full = aug.augmented;
    const int total = n + 2;

    AuditReport r;
    r.sentinel_v = aug.v;
    r.sentinel_w = aug.w;
    r.anchor_u = aug.u;
    r.independent_size = independent.count();

    std::vector<bool> keep(static_cast<std::size_t>(total), true);
    for (int x : independent.members())
        keep[static_cast<std::size_t>(x)] = false;
    r.s_size = static_cast<std::size_t>(total) - r.independent_size;

    std::vector<Edge> induced;
    for (const auto& e : full.edges())
        if (keep[static_cast<std::size_t>(e.a)] && keep[static_cast<std::size_t>(e.b)])
            induced.push_back(e);
    r.e = induced.size();

    // Face traversal: the successor of x->y is y->z with z the clockwise
    // neighbor of x around y, which keeps the face on the left.
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(total));
    for (int x = 0; x < total; ++x)
        if (keep[static_cast<std::size_t>(x)])
            rot[static_cast<std::size_t>(x)] = rotation(full, x, keep);
    auto successor = [&](int x, int y) {
        const auto& around = rot[static_cast<std::size_t>(y)];
        auto it = std::find(around.begin(), around.end(), x);
        const auto i = static_cast<std::size_t>(it - around.begin());
        return around[(i + around.size() - 1) % around.size()];
    };

    std::map<std::pair<int, int>, int> face_of;
    std::vector<std::vector<int>> faces;
    for (const auto& e : induced) {
        for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
            if (face_of.count({x, y}))
                continue;
            const int id = static_cast<int>(faces.size());
            std::vector<int> cycle;
            int a = x;
            int b = y;
            while (!face_of.count({a, b})) {
                face_of[{a, b}] = id;
                cycle.push_back(a);
                const int c = successor(a, b);
                a = b;
                b = c;
            }
            faces.push_back(std::move(cycle));
        }
    }

    bool faces_ok = true;
    std::vector<bool> interior(faces.size(), false);
    int outer = -1;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cyc = faces[f];
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            faces_ok = false; // boundary is not a simple cycle
        Coord area2(0);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            area2 += cross(full.vertex(cyc[i]),
                           full.vertex(cyc[(i + 1) % cyc.size()]));
        if (sgn(area2) > 0) {
            interior[f] = true;
        } else {
            if (outer != -1)
                faces_ok = false;
            outer = static_cast<int>(f);
        }
    }
    if (outer == -1)
        faces_ok = false;
    else {
        std::vector<int> hull = faces[static_cast<std::size_t>(outer)];
        std::sort(hull.begin(), hull.end());
        std::vector<int> expected{aug.u, n, n + 1};
        std::sort(expected.begin(), expected.end());
        if (hull != expected)
            faces_ok = false;
    }

    // Each removed vertex x sits in the face bounded by its link, which we
    // find through any directed link edge a->b of a triangle (x, a, b).
    std::vector<int> occupants(faces.size(), 0);
    for (int x : independent.members()) {
        int home = -1;
        for (const auto& tri : full.triangles()) {
            for (std::size_t k = 0; k < 3; ++k) {
                if (tri[k] != x)
                    continue;
                auto it = face_of.find({tri[(k + 1) % 3], tri[(k + 2) % 3]});
                if (it == face_of.end()) {
                    faces_ok = false;
                    continue;
                }
                if (home != -1 && home != it->second)
                    faces_ok = false;
                home = it->second;
            }
        }
        if (home < 0 || !interior[static_cast<std::size_t>(home)]) {
            faces_ok = false;
            continue;
        }
        ++occupants[static_cast<std::size_t>(home)];
        if (winding(full, faces[static_cast<std::size_t>(home)], full.vertex(x)) != 1)
            faces_ok = false;
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (!interior[f])
            continue;
        if (occupants[f] > 1)
            faces_ok = false;
        if (occupants[f] == 1) {
            ++r.b;
            continue;
        }
        ++r.g;
        if (faces[f].size() != 3)
            faces_ok = false;
        for (int x : independent.members())
            if (winding(full, faces[f], full.vertex(x)) != 0)
                faces_ok = false;
    }
    r.faces_ok = faces_ok;
    r.euler_ok = r.e == r.s_size + r.b + r.g - 1;

    r.per_edge_exact_ok = true;
    r.d_degrees = 0.0;
    for (const auto& e : induced) {
        for (int apex : full.apexes(e))
            r.d_degrees += angle_degrees(full.vertex(apex), full.vertex(e.a),
                                         full.vertex(e.b));
        if (full.kind(e) == EdgeKind::INTERIOR &&
            edge_angle_check(full, e) != AngleCheck::OK)
            r.per_edge_exact_ok = false;
    }
    r.d_exact = 180 * static_cast<long>(r.g) + 360 * static_cast<long>(r.b);
    r.d_agrees = std::abs(static_cast<double>(r.d_exact) - r.d_degrees) <
                 kAngleRelTolerance * static_cast<double>(r.d_exact);
    r.strict_inequality = r.d_exact < 180 * static_cast<long>(r.e);
    r.b_equals_independent = r.b == r.independent_size;
    r.conclusion_b_le = r.b + 2 <= r.s_size;
    r.bound_ok = r.independent_size <= t.size() / 2;
    return r;
}

RepresentativeReport representative_independence(const Triangulation& t,
                                                 const VertexSet& s)
{
    const auto comps = components_after_removal(t, s);
    VertexSet reps(t.size());
    for (const auto& c : comps)
        reps.insert(c.front());

    std::vector<int> kept;
    for (int v = 0; v < static_cast<int>(t.size()); ++v)
        if (s.contains(v) || reps.contains(v))
            kept.push_back(v);
    if (kept.size() < 3)
        throw PreconditionViolated("fewer than three points in S plus representatives");

    std::vector<Point> points;
    for (int v : kept)
        points.push_back(t.vertex(v));
    Triangulation reduced = build(points);

    bool independent = true;
    for (const auto& e : reduced.edges())
        if (reps.contains(kept[static_cast<std::size_t>(e.a)]) &&
            reps.contains(kept[static_cast<std::size_t>(e.b)]))
            independent = false;

    return RepresentativeReport{comps.size(), std::move(reduced),
                                std::move(kept), std::move(reps), independent};
}

} // namespace dtough
