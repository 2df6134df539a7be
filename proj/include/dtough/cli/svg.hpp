#pragma once

#include <dtough/delaunay.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dtough::cli {

/// Everything one figure can show. Vertex indices refer to `points`.
struct Scene
{
    std::vector<Point> points;
    /// Edges to draw; hull edges are drawn bold.
    std::optional<Triangulation> triangulation;
    /// Drawn as hollow circles.
    std::vector<int> hollow;
    /// Edges incident to these vertices are drawn dashed.
    std::vector<int> dashed_around;
    std::vector<Disk> disks;
    std::vector<Point> blockers;
    std::vector<int> path;
};

/// Deterministic SVG. The y axis points up; coordinates are rounded to six
/// decimals for output only.
std::string render_svg(const Scene& scene);

} // namespace dtough::cli
