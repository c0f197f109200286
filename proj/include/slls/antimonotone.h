// The simple antimonotone binary linking scheme G_ls2 and its vertex
// correspondence with the binary skip list scheme.
//
// G_ls2 has inner vertices m >= 1 with edges m -> m-1 and m -> f2(m).
// Numbering G_ls2 vertices by the vertex count of the longest path down to
// 1 (the only numbering an isomorphism can induce) places the skip list's
// JUMP targets at f2(x) + 1 rather than f2(x), and vertices 2^k - 1 keep an
// f2 edge that the skip list's vertebrae do not have. The maps below use
// that index-aligned jump target; f2 itself stays exactly as defined.

#ifndef SLLS_ANTIMONOTONE_H_
#define SLLS_ANTIMONOTONE_H_

#include <cstdint>
#include <optional>
#include <utility>

#include "slls/skipgraph.h"

namespace slls::antimonotone {

// g(n) = k if n = 2^k - 1, else g(n - (2^(k-1) - 1)) for the k with
// 2^(k-1) - 1 < n < 2^k - 1. Throws on n = 0.
std::uint32_t G(std::uint64_t n);

// f2(n) = n - (2^(k-1) + 1) if n = 2^k - 1, else n - 2^g(n). Throws on
// n < 2. A result of 0 names no vertex (the edge is omitted).
std::uint64_t F2(std::uint64_t n);

// Largest m considered by the memoized longest-path tables.
inline constexpr std::uint64_t kMaxTableVertex = std::uint64_t{1} << 16;

// Number of vertices on the longest path from v to (1,0) in SLLS_2.
std::uint64_t Slls2ToLs2(const Vertex& v);

// Inverse of Slls2ToLs2: walks the longest path from m to 1 and reads the
// position from the jump-aligned predecessor edges and the layer from the
// leading run of pure predecessor edges.
Vertex Ls2ToSlls2(std::uint64_t m);

// The SLLS_2-aligned jump target of m (f2(m) + 1), or nullopt where the
// skip list has no matching jump (m = 2^k - 1, and m = 1).
std::optional<std::uint64_t> AlignedJumpTarget(std::uint64_t m);

// First pair n < m (2 <= n < m <= limit) violating n < m => f2(n) >= f2(m).
std::optional<std::pair<std::uint64_t, std::uint64_t>>
FirstAntimonotonicityViolation(std::uint64_t limit);

}  // namespace slls::antimonotone

#endif  // SLLS_ANTIMONOTONE_H_
