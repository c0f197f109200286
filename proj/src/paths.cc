#include "slls/paths.h"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "slls/antimonotone.h"

namespace slls {
namespace {

void RequireValid(const Scheme& scheme, const Vertex& v) {
  if (!v.is_inner() || !VertexValid(scheme, v)) {
    throw Error(ErrorCode::kDomain,
                "path endpoint must be a valid inner vertex: " + v.ToString());
  }
}

void RequireReachable(const Vertex& src, const Vertex& dst) {
  if (!Reachable(src, dst)) {
    throw Error(ErrorCode::kUnreachable,
                dst.ToString() + " is not reachable from " + src.ToString());
  }
}

void RequireLength(std::size_t vertices, std::size_t max_vertices) {
  if (vertices > max_vertices) {
    throw Error(ErrorCode::kBoundExceeded,
                "path longer than " + std::to_string(max_vertices));
  }
}

Path LinearPath(const Scheme& scheme, const Vertex& src, const Vertex& dst,
                std::size_t max_vertices) {
  RequireLength(src.position - dst.position + 1, max_vertices);
  Path path{scheme, {}};
  for (Position n = src.position;; --n) {
    path.vertices.push_back(Vertex::Inner(n, 0));
    if (n == dst.position) break;
  }
  return path;
}

Path AntimonotonePath(const Scheme& scheme, const Vertex& src,
                      const Vertex& dst, std::size_t max_vertices) {
  Path path{scheme, {src}};
  Position n = src.position;
  while (n != dst.position) {
    RequireLength(path.vertices.size() + 1, max_vertices);
    const std::uint64_t f = antimonotone::F2(n);
    n = (f >= 1 && f >= dst.position) ? f : n - 1;
    path.vertices.push_back(Vertex::Inner(n, 0));
  }
  return path;
}

}  // namespace

bool Path::Contains(const Vertex& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool IsValidPath(const Path& path) {
  if (path.vertices.empty()) return false;
  for (const Vertex& v : path.vertices) {
    if (!VertexValid(path.scheme, v)) return false;
  }
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Neighbors out = OutNeighbors(path.scheme, path.vertices[i]);
    if (std::find(out.begin(), out.end(), path.vertices[i + 1]) == out.end()) {
      return false;
    }
  }
  return true;
}

bool Reachable(const Vertex& src, const Vertex& dst) {
  if (dst.position < src.position) return true;
  return dst.position == src.position && dst.layer <= src.layer;
}

Path GreedyPath(const Scheme& scheme, const Vertex& src, const Vertex& dst) {
  if (!scheme.is_skip_list()) {
    throw Error(ErrorCode::kDomain, "greedy path requires a skip list scheme");
  }
  RequireValid(scheme, src);
  RequireValid(scheme, dst);
  RequireReachable(src, dst);

  const std::uint64_t b = scheme.base();
  Path path{scheme, {src}};
  Vertex cur = src;
  while (cur != dst) {
    if (cur.position == dst.position) {
      cur = Vertex::Inner(cur.position, cur.layer - 1);
    } else {
      const std::uint64_t step = CheckedPow(b, cur.layer);
      if (cur.position > step && cur.position - step >= dst.position) {
        const Position target = cur.position - step;
        cur = Vertex::Inner(target, MaxPow(b, target));
      } else {
        // Layer 0 always has a JUMP of 1 that cannot pass dst, so DOWN is
        // only taken from layers >= 1.
        cur = Vertex::Inner(cur.position, cur.layer - 1);
      }
    }
    path.vertices.push_back(cur);
  }
  return path;
}

Path CanonicalPath(const Scheme& scheme, const Vertex& src, const Vertex& dst,
                   std::size_t max_vertices) {
  switch (scheme.kind()) {
    case Scheme::Kind::kSkipList: {
      Path path = GreedyPath(scheme, src, dst);
      RequireLength(path.vertices.size(), max_vertices);
      return path;
    }
    case Scheme::Kind::kLinear:
      RequireValid(scheme, src);
      RequireValid(scheme, dst);
      RequireReachable(src, dst);
      return LinearPath(scheme, src, dst, max_vertices);
    case Scheme::Kind::kAntimonotoneBinary:
      RequireValid(scheme, src);
      RequireValid(scheme, dst);
      RequireReachable(src, dst);
      return AntimonotonePath(scheme, src, dst, max_vertices);
  }
  throw Error(ErrorCode::kDomain, "unknown scheme");
}

std::optional<Path> BfsPath(const Scheme& scheme, const Vertex& src,
                            const Vertex& dst) {
  if (src.position > kBfsPositionLimit || dst.position > kBfsPositionLimit) {
    throw Error(ErrorCode::kBoundExceeded, "BFS oracle limited to 2^20");
  }
  if (!VertexValid(scheme, src) || !VertexValid(scheme, dst)) {
    throw Error(ErrorCode::kDomain, "BFS endpoints must be valid vertices");
  }
  // Positions never increase along an edge, so nothing below dst's
  // position can lead back to it.
  std::unordered_map<Vertex, Vertex> parent;
  parent.emplace(src, src);
  std::deque<Vertex> queue{src};
  bool found = src == dst;
  while (!queue.empty() && !found) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Vertex& w : OutNeighbors(scheme, v)) {
      if (w.position < dst.position || parent.contains(w)) continue;
      parent.emplace(w, v);
      if (w == dst) {
        found = true;
        break;
      }
      queue.push_back(w);
    }
  }
  if (!found) return std::nullopt;

  Path path{scheme, {dst}};
  for (Vertex v = dst; v != src;) {
    v = parent.at(v);
    path.vertices.push_back(v);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

std::unordered_map<Vertex, std::size_t> BfsDistances(const Scheme& scheme,
                                                     const Vertex& src,
                                                     Position floor) {
  if (src.position > kBfsPositionLimit) {
    throw Error(ErrorCode::kBoundExceeded, "BFS oracle limited to 2^20");
  }
  std::unordered_map<Vertex, std::size_t> dist;
  dist.emplace(src, 0);
  std::deque<Vertex> queue{src};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const std::size_t d = dist.at(v);
    for (const Vertex& w : OutNeighbors(scheme, v)) {
      if (w.is_sink() || w.position < floor || dist.contains(w)) continue;
      dist.emplace(w, d + 1);
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<Vertex> OffPathOutNeighbors(const Path& path,
                                        bool exclude_final_vertex) {
  const std::unordered_set<Vertex> on_path(path.vertices.begin(),
                                           path.vertices.end());
  std::unordered_set<Vertex> seen;
  std::vector<Vertex> out;
  std::size_t count = path.vertices.size();
  if (exclude_final_vertex) --count;
  for (std::size_t i = 0; i < count; ++i) {
    for (const Vertex& w : OutNeighbors(path.scheme, path.vertices[i])) {
      if (on_path.contains(w) || !seen.insert(w).second) continue;
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace slls
