// Canonical shortest paths on the implicit graph, plus a breadth-first
// oracle for checking them.

#ifndef SLLS_PATHS_H_
#define SLLS_PATHS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "slls/skipgraph.h"

namespace slls {

struct Path {
  Scheme scheme;
  std::vector<Vertex> vertices;  // never empty

  std::size_t edge_count() const { return vertices.size() - 1; }
  const Vertex& front() const { return vertices.front(); }
  const Vertex& back() const { return vertices.back(); }
  bool Contains(const Vertex& v) const;

  friend bool operator==(const Path&, const Path&) = default;
};

// True if every vertex is valid and consecutive vertices are edges.
bool IsValidPath(const Path& path);

// Whether dst can be reached from src: lower position, or same position and
// a layer at most src's.
bool Reachable(const Vertex& src, const Vertex& dst);

// The canonical skip list path: at dst's position descend to dst's layer;
// otherwise JUMP while the target does not pass dst, else DOWN. Throws
// Error(kUnreachable) if dst is not reachable from src.
Path GreedyPath(const Scheme& scheme, const Vertex& src, const Vertex& dst);

// The path every certificate is built on. Skip lists use GreedyPath,
// Linear walks predecessors, and AntimonotoneBinary takes the f2 edge
// whenever it does not pass dst. Throws Error(kBoundExceeded) rather than
// build a path of more than max_vertices vertices.
Path CanonicalPath(const Scheme& scheme, const Vertex& src, const Vertex& dst,
                   std::size_t max_vertices = SIZE_MAX);

// Positions above this are rejected by the BFS oracle.
inline constexpr Position kBfsPositionLimit = Position{1} << 20;

// Breadth-first shortest path; ties go to the earlier canonical neighbor.
// nullopt when dst is unreachable.
std::optional<Path> BfsPath(const Scheme& scheme, const Vertex& src,
                            const Vertex& dst);

// Edge distances from src to every inner vertex with position >= floor.
std::unordered_map<Vertex, std::size_t> BfsDistances(const Scheme& scheme,
                                                     const Vertex& src,
                                                     Position floor);

// Out-neighbors of path vertices that are not on the path, in first
// occurrence order, optionally skipping the last vertex's neighbors.
std::vector<Vertex> OffPathOutNeighbors(const Path& path,
                                        bool exclude_final_vertex);

}  // namespace slls

#endif  // SLLS_PATHS_H_
