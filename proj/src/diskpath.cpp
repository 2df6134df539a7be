#include <dtough/diskpath.hpp>

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace dtough {

namespace {

std::vector<int> interior_vertices(const Triangulation& t, const Disk& d)
{
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(t.size()); ++v)
        if (disk_classify(d, t.vertex(v)) == DiskSide::INTERIOR)
            out.push_back(v);
    return out;
}

// Vertices of `among` whose shrink parameter from `anchor` is minimal.
std::vector<int> first_hit(const Triangulation& t, const Disk& d, int anchor,
                           const std::vector<int>& among)
{
    std::vector<int> best;
    Coord best_t;
    for (int v : among) {
        Coord tv = shrink_parameter(d, t.vertex(anchor), t.vertex(v));
        if (best.empty() || tv < best_t) {
            best = {v};
            best_t = tv;
        } else if (tv == best_t) {
            best.push_back(v);
        }
    }
    return best;
}

// Vertices other than r that land on the boundary of the disk shrunk from
// anchor onto r.
std::vector<int> boundary_ties(const Triangulation& t, const Disk& d, int anchor,
                               int r, const std::vector<int>& among)
{
    const Coord tr = shrink_parameter(d, t.vertex(anchor), t.vertex(r));
    std::vector<int> ties{r};
    for (int v : among)
        if (v != r &&
            shrink_parameter(d, t.vertex(anchor), t.vertex(v)) == tr)
            ties.push_back(v);
    return ties;
}

std::vector<int> recurse(const Triangulation& t, int p, int q, const Disk& d)
{
    const auto inside = interior_vertices(t, d);
    if (inside.empty()) {
        if (!t.has_edge(p, q))
            throw InvariantBroken("empty disk through two vertices without an edge");
        return {p, q};
    }

    const auto hit = first_hit(t, d, p, inside);
    if (hit.size() > 1)
        throw TieOnBoundary(p, hit);
    const int r = hit.front();
    const auto q_ties = boundary_ties(t, d, q, r, inside);
    if (q_ties.size() > 1)
        throw TieOnBoundary(q, q_ties);

    const Disk dpr = shrink_toward(d, t.vertex(p), t.vertex(r));
    const Disk dqr = shrink_toward(d, t.vertex(q), t.vertex(r));
    if (!internally_tangent(d, dpr) || !internally_tangent(d, dqr))
        throw InvariantBroken("shrunk disk escapes its parent");
    if (interior_vertices(t, dpr).size() >= inside.size() ||
        interior_vertices(t, dqr).size() >= inside.size())
        throw InvariantBroken("shrinking did not reduce the interior vertices");

    auto left = recurse(t, p, r, dpr);
    auto right = recurse(t, q, r, dqr);
    // left runs p..r, right runs q..r; join as p..r..q.
    left.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());

    // Drop any loop: keep the first visit of each vertex and splice
    // straight to its last visit.
    std::vector<int> simple;
    std::unordered_map<int, std::size_t> last;
    for (std::size_t i = 0; i < left.size(); ++i)
        last[left[i]] = i;
    for (std::size_t i = 0; i < left.size(); i = last[left[i]] + 1)
        simple.push_back(left[i]);
    return simple;
}

} // namespace

DiskPath find_path(const Triangulation& t, int p, int q, const Disk& d)
{
    const int n = static_cast<int>(t.size());
    if (p < 0 || q < 0 || p >= n || q >= n || p == q)
        throw PreconditionViolated("invalid endpoints");
    for (int v = 0; v < n; ++v) {
        const bool on = disk_classify(d, t.vertex(v)) == DiskSide::BOUNDARY;
        if ((v == p || v == q) && !on)
            throw PreconditionViolated("endpoint not on the disk boundary");
        if (v != p && v != q && on)
            throw PreconditionViolated("vertex " + std::to_string(v) +
                                       " lies on the disk boundary");
    }
    return DiskPath{recurse(t, p, q, d), d};
}

std::optional<DiskPath> path_oracle(const Triangulation& t, int p, int q,
                                    const Disk& d)
{
    const std::size_t n = t.size();
    auto in = [&](int v) {
        return disk_classify(d, t.vertex(v)) != DiskSide::EXTERIOR;
    };
    if (!in(p) || !in(q))
        return std::nullopt;
    std::vector<int> parent(n, -1);
    parent[static_cast<std::size_t>(p)] = p;
    std::deque<int> queue{p};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (v == q)
            break;
        for (int w : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] != -1 || !in(w))
                continue;
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    if (parent[static_cast<std::size_t>(q)] == -1)
        return std::nullopt;
    std::vector<int> path;
    for (int v = q; v != p; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    path.push_back(p);
    std::reverse(path.begin(), path.end());
    return DiskPath{std::move(path), d};
}

bool valid_disk_path(const Triangulation& t, int p, int q, const DiskPath& path)
{
    const auto& vs = path.vertices;
    if (vs.size() < 2 || vs.front() != p || vs.back() != q)
        return false;
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= static_cast<int>(t.size()))
            return false;
        if (disk_classify(path.disk, t.vertex(vs[i])) == DiskSide::EXTERIOR)
            return false;
        if (i + 1 < vs.size() && !t.has_edge(vs[i], vs[i + 1]))
            return false;
    }
    return true;
}

} // namespace dtough
