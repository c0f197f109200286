// Certificate pools and positional certificates at the vertex level.
//
// The pool of n (generation t) is the union of three canonical paths:
//   A: vertebra(t)     -> commit(n)
//   B: commit(n)       -> vertebra(t-1)
//   C: vertebra(t-1)   -> (1,0)
// Its positional certificate is the exclusive out-neighborhood: neighbors
// of pool vertices that are not themselves in the pool. Bounded pools cap
// everything at a round's top vertex (N, T) with N = b^T.

#ifndef SLLS_POOLS_H_
#define SLLS_POOLS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "slls/paths.h"

namespace slls {

struct CertPool {
  Scheme scheme;
  Position n = 0;
  // Traversal order for the positional certificate. Unbounded pools hold
  // A, B, C (only C = [(1,0)] for n = 1); bounded pools hold their own
  // segments in the same front-to-back sense.
  std::vector<Path> components;
  // Set when the pool belongs to a timestamping round of this length.
  std::optional<Position> round_length;

  // Distinct vertices in ascending Vertex order.
  std::vector<Vertex> Vertices() const;
  bool Contains(const Vertex& v) const;
  Position MaxPosition() const;
};

CertPool CertificatePool(const Scheme& scheme, Position n);

// Throws Error(kDomain) unless 1 <= n <= N and N = b^T with T >= 1.
CertPool BoundedPool(const Scheme& scheme, Position n, Position round_length);

// Exclusive out-neighborhood of a pool, ordered by walking the components
// front to back with canonical neighbor order.
std::vector<Vertex> ExclusiveOutNeighborhood(const CertPool& pool);

std::vector<Vertex> PositionalVertices(const Scheme& scheme, Position n);

struct BoundedPositional {
  std::vector<Vertex> vertices;
  bool chain_slot = false;  // one extra slot for the previous round digest

  std::size_t size() const { return vertices.size() + (chain_slot ? 1 : 0); }
};

BoundedPositional BoundedPositionalVertices(const Scheme& scheme, Position n,
                                            Position round_length,
                                            bool chained);

// T with N = b^T, T >= 1; throws Error(kDomain) otherwise.
std::uint32_t RoundExponent(const Scheme& scheme, Position round_length);

}  // namespace slls

#endif  // SLLS_POOLS_H_
