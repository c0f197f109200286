#include "slls/antimonotone.h"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>
#include <vector>

namespace slls::antimonotone {
namespace {

// n = 2^k - 1 for some k >= 1?
bool IsMersenne(std::uint64_t n) { return n != 0 && ((n + 1) & n) == 0; }

// Smallest k >= 1 with n <= 2^k - 1.
std::uint32_t EnclosingExponent(std::uint64_t n) {
  return static_cast<std::uint32_t>(std::bit_width(n));
}

// Longest-path vertex counts in SLLS_2, filled position by position. A
// vertex's neighbors all have smaller (position, layer), so each position
// only needs the rows below it.
class LongestPathTable {
 public:
  std::uint64_t Get(const Vertex& v) {
    std::lock_guard<std::mutex> lock(mu_);
    Extend(v.position);
    return counts_[offsets_[v.position] + v.layer];
  }

 private:
  void Extend(Position upto) {
    if (offsets_.empty()) offsets_.push_back(0);  // position 0 unused
    const Scheme scheme = Scheme::SkipList(2);
    for (Position n = offsets_.size(); n <= upto; ++n) {
      offsets_.push_back(counts_.size());
      const Layer top = MaxPow(2, n);
      for (Layer k = 0; k <= top; ++k) {
        std::uint64_t best = 1;
        for (const Vertex& w : OutNeighbors(scheme, Vertex::Inner(n, k))) {
          if (w.is_sink()) continue;
          best = std::max(best, counts_[offsets_[w.position] + w.layer] + 1);
        }
        counts_.push_back(best);
      }
    }
  }

  std::mutex mu_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> counts_;
};

LongestPathTable& Table() {
  static LongestPathTable table;
  return table;
}

}  // namespace

std::uint32_t G(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "g(0) is undefined");
  while (!IsMersenne(n)) {
    const std::uint32_t k = EnclosingExponent(n);
    n -= (std::uint64_t{1} << (k - 1)) - 1;
  }
  return EnclosingExponent(n);
}

std::uint64_t F2(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kDomain, "f2 requires n >= 2");
  if (IsMersenne(n)) {
    const std::uint32_t k = EnclosingExponent(n);
    const std::uint64_t cut = (std::uint64_t{1} << (k - 1)) + 1;
    return n > cut ? n - cut : 0;
  }
  const std::uint64_t step = std::uint64_t{1} << G(n);
  return n > step ? n - step : 0;
}

std::optional<std::uint64_t> AlignedJumpTarget(std::uint64_t m) {
  if (m < 2 || IsMersenne(m)) return std::nullopt;
  return F2(m) + 1;
}

std::uint64_t Slls2ToLs2(const Vertex& v) {
  if (!v.is_inner() || !VertexValid(Scheme::SkipList(2), v)) {
    throw Error(ErrorCode::kDomain, "not an SLLS_2 inner vertex: " + v.ToString());
  }
  if (v.position > kMaxTableVertex) {
    throw Error(ErrorCode::kBoundExceeded, "position beyond longest-path table");
  }
  return Table().Get(v);
}

Vertex Ls2ToSlls2(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::kDomain, "G_ls2 vertices start at 1");
  if (m > kMaxTableVertex) {
    throw Error(ErrorCode::kBoundExceeded, "vertex beyond longest-path table");
  }
  // Longest path to 1 by dynamic programming over m -> m-1 and m -> f2(m).
  std::vector<std::uint64_t> length(m + 1, 0);
  std::vector<std::uint64_t> next(m + 1, 0);
  for (std::uint64_t x = 2; x <= m; ++x) {
    length[x] = length[x - 1] + 1;
    next[x] = x - 1;
    const std::uint64_t f = F2(x);
    if (f >= 1 && length[f] + 1 > length[x]) {
      length[x] = length[f] + 1;
      next[x] = f;
    }
  }

  Position position = 1;
  Layer layer = 0;
  bool leading = true;
  for (std::uint64_t x = m; x != 1; x = next[x]) {
    const auto aligned = AlignedJumpTarget(x);
    if (aligned && *aligned == next[x]) {
      ++position;
      leading = false;
    } else if (leading) {
      ++layer;
    }
  }
  return Vertex::Inner(position, layer);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
FirstAntimonotonicityViolation(std::uint64_t limit) {
  if (limit < 3) return std::nullopt;
  std::uint64_t min_value = F2(2);
  std::uint64_t argmin = 2;
  for (std::uint64_t m = 3; m <= limit; ++m) {
    const std::uint64_t f = F2(m);
    if (min_value < f) return std::make_pair(argmin, m);
    if (f < min_value) {
      min_value = f;
      argmin = m;
    }
  }
  return std::nullopt;
}

}  // namespace slls::antimonotone
