#pragma once

// Paths between two vertices of a Delaunay triangulation that stay inside a
// closed disk through both of them.

#include <dtough/delaunay.hpp>

#include <optional>
#include <vector>

namespace dtough {

struct DiskPath
{
    std::vector<int> vertices; ///< from p to q, no repeats
    Disk disk;
};

/// Builds the path recursively: with no vertex inside D, pq is an edge;
/// otherwise take the interior vertex r met first when D is shrunk from p
/// along the ray toward its center, shrink D from p and from q onto r, and
/// join the two sub-paths.
///
/// Requires p and q on the boundary of D and no other vertex on it. Throws
/// PreconditionViolated, TieOnBoundary when two vertices reach a shrinking
/// boundary together, or InvariantBroken when an empty disk does not yield
/// an edge.
DiskPath find_path(const Triangulation& t, int p, int q, const Disk& d);

/// Breadth-first search restricted to vertices in the closed disk. Shortest
/// such path, or nullopt.
std::optional<DiskPath> path_oracle(const Triangulation& t, int p, int q,
                                    const Disk& d);

/// Whether `path` walks edges of t from p to q without repeating a vertex
/// and stays inside the closed disk.
bool valid_disk_path(const Triangulation& t, int p, int q,
                     const DiskPath& path);

} // namespace dtough
