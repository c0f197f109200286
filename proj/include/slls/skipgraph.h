// Vertices and implicit adjacency of the supported linking schemes.
//
// The graph is never materialized. Every query is answered from integer
// arithmetic on (position, layer), so positions up to 2^64 - 1 are
// addressable.

#ifndef SLLS_SKIPGRAPH_H_
#define SLLS_SKIPGRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "slls/error.h"
#include "slls/small_vector.h"

namespace slls {

using Position = std::uint64_t;
using Layer = std::uint32_t;

struct Vertex {
  enum class Kind : std::uint8_t { kInner = 0, kSink = 1 };

  Kind kind = Kind::kInner;
  Position position = 0;
  Layer layer = 0;

  static constexpr Vertex Inner(Position n, Layer k) {
    return Vertex{Kind::kInner, n, k};
  }
  static constexpr Vertex Sink(Position n) { return Vertex{Kind::kSink, n, 0}; }

  constexpr bool is_sink() const { return kind == Kind::kSink; }
  constexpr bool is_inner() const { return kind == Kind::kInner; }

  // Orders by position, then sink-before-inner, then layer. Every
  // out-neighbor of a vertex compares strictly less than it.
  friend constexpr auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.position <=> b.position; c != 0) return c;
    if (auto c = b.kind <=> a.kind; c != 0) return c;
    return a.layer <=> b.layer;
  }
  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;

  // "(n,k)" for inner vertices, "n" for sinks.
  std::string ToString() const;
};

class Scheme {
 public:
  enum class Kind : std::uint8_t { kLinear, kSkipList, kAntimonotoneBinary };

  static constexpr std::uint64_t kMaxBase = 244;

  static Scheme Linear() { return Scheme(Kind::kLinear, 0); }
  static Scheme AntimonotoneBinary() {
    return Scheme(Kind::kAntimonotoneBinary, 0);
  }
  // Throws Error(kDomain) unless 2 <= base <= kMaxBase.
  static Scheme SkipList(std::uint64_t base);

  Kind kind() const { return kind_; }
  bool is_skip_list() const { return kind_ == Kind::kSkipList; }
  // Only meaningful for skip lists.
  std::uint64_t base() const { return base_; }

  // Wire tag: 0x00 linear, 0x01 antimonotone, 0x02 / 0x03 for bases 2 and
  // 3, 0x0b + base for larger bases.
  std::uint8_t tag() const;
  static Scheme FromTag(std::uint8_t tag);

  std::string ToString() const;

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  Scheme(Kind kind, std::uint64_t base) : kind_(kind), base_(base) {}

  Kind kind_;
  std::uint64_t base_;
};

// At most three out-neighbors (antimonotone: predecessor, f2 target, sink).
using Neighbors = SmallVector<Vertex, 3>;

// Largest p with base^p dividing n.
Layer MaxPow(std::uint64_t base, std::uint64_t n);

// base^exp, throwing Error(kOverflow) if it does not fit in 64 bits.
std::uint64_t CheckedPow(std::uint64_t base, std::uint32_t exp);

bool VertexValid(const Scheme& scheme, const Vertex& v);

// Out-neighbors in canonical order. This order is the hashing order used
// everywhere downstream. For skip lists: DOWN first (or the sink at layer
// 0), then the JUMP to the topmost layer of position n - b^k.
Neighbors OutNeighbors(const Scheme& scheme, const Vertex& v);

// The unique parent of Sink(n).
Vertex Commit(const Scheme& scheme, Position n);

// Smallest t with base^t >= n.
std::uint32_t Generation(const Scheme& scheme, Position n);

// (b^t, t).
Vertex Vertebra(const Scheme& scheme, std::uint32_t t);

}  // namespace slls

template <>
struct std::hash<slls::Vertex> {
  std::size_t operator()(const slls::Vertex& v) const noexcept {
    std::uint64_t h = v.position * 0x9e3779b97f4a7c15ULL;
    h ^= (static_cast<std::uint64_t>(v.layer) << 1 | v.is_sink()) +
         0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

#endif  // SLLS_SKIPGRAPH_H_
