#include "slls/skipgraph.h"

#include <limits>

#include "slls/antimonotone.h"

namespace slls {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain:
      return "domain";
    case ErrorCode::kOverflow:
      return "overflow";
    case ErrorCode::kUnreachable:
      return "unreachable";
    case ErrorCode::kBoundExceeded:
      return "bound-exceeded";
    case ErrorCode::kInsufficientData:
      return "insufficient-data";
    case ErrorCode::kOutOfRange:
      return "out-of-range";
    case ErrorCode::kMissingLabel:
      return "missing-label";
    case ErrorCode::kMalformed:
      return "malformed";
  }
  return "unknown";
}

std::string Vertex::ToString() const {
  if (is_sink()) return std::to_string(position);
  return "(" + std::to_string(position) + "," + std::to_string(layer) + ")";
}

Scheme Scheme::SkipList(std::uint64_t base) {
  if (base < 2 || base > kMaxBase) {
    throw Error(ErrorCode::kDomain,
                "skip list base must be in [2, 244], got " +
                    std::to_string(base));
  }
  return Scheme(Kind::kSkipList, base);
}

std::uint8_t Scheme::tag() const {
  switch (kind_) {
    case Kind::kLinear:
      return 0x00;
    case Kind::kAntimonotoneBinary:
      return 0x01;
    case Kind::kSkipList:
      if (base_ <= 3) return static_cast<std::uint8_t>(base_);
      return static_cast<std::uint8_t>(0x0b + base_);
  }
  return 0xff;
}

Scheme Scheme::FromTag(std::uint8_t tag) {
  if (tag == 0x00) return Linear();
  if (tag == 0x01) return AntimonotoneBinary();
  if (tag == 0x02 || tag == 0x03) return SkipList(tag);
  if (tag >= 0x0b + 4) return SkipList(tag - 0x0b);
  throw Error(ErrorCode::kMalformed, "unknown scheme tag " + std::to_string(tag));
}

std::string Scheme::ToString() const {
  switch (kind_) {
    case Kind::kLinear:
      return "linear";
    case Kind::kAntimonotoneBinary:
      return "antimonotone-binary";
    case Kind::kSkipList:
      return "skiplist-" + std::to_string(base_);
  }
  return "?";
}

Layer MaxPow(std::uint64_t base, std::uint64_t n) {
  if (base < 2 || n == 0) {
    throw Error(ErrorCode::kDomain, "MaxPow requires base >= 2 and n >= 1");
  }
  Layer p = 0;
  while (n % base == 0) {
    n /= base;
    ++p;
  }
  return p;
}

std::uint64_t CheckedPow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::kOverflow, "power exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

bool VertexValid(const Scheme& scheme, const Vertex& v) {
  if (v.position == 0) return false;
  if (v.is_sink()) return v.layer == 0;
  if (scheme.is_skip_list()) {
    return v.layer <= MaxPow(scheme.base(), v.position);
  }
  return v.layer == 0;
}

Neighbors OutNeighbors(const Scheme& scheme, const Vertex& v) {
  if (!VertexValid(scheme, v)) {
    throw Error(ErrorCode::kDomain, "invalid vertex " + v.ToString() +
                                        " for " + scheme.ToString());
  }
  Neighbors out;
  if (v.is_sink()) return out;
  const Position n = v.position;
  switch (scheme.kind()) {
    case Scheme::Kind::kSkipList: {
      out.push_back(v.layer > 0 ? Vertex::Inner(n, v.layer - 1)
                                : Vertex::Sink(n));
      // b^k divides n, so the step never exceeds n.
      const std::uint64_t step = CheckedPow(scheme.base(), v.layer);
      if (n > step) {
        const Position target = n - step;
        out.push_back(Vertex::Inner(target, MaxPow(scheme.base(), target)));
      }
      break;
    }
    case Scheme::Kind::kLinear:
      if (n > 1) out.push_back(Vertex::Inner(n - 1, 0));
      out.push_back(Vertex::Sink(n));
      break;
    case Scheme::Kind::kAntimonotoneBinary:
      if (n > 1) {
        out.push_back(Vertex::Inner(n - 1, 0));
        const std::uint64_t f = antimonotone::F2(n);
        if (f >= 1) out.push_back(Vertex::Inner(f, 0));
      }
      out.push_back(Vertex::Sink(n));
      break;
  }
  return out;
}

Vertex Commit(const Scheme& scheme, Position n) {
  (void)scheme;
  if (n == 0) throw Error(ErrorCode::kDomain, "commit(0) does not exist");
  return Vertex::Inner(n, 0);
}

std::uint32_t Generation(const Scheme& scheme, Position n) {
  if (!scheme.is_skip_list()) {
    throw Error(ErrorCode::kDomain, "generation requires a skip list scheme");
  }
  if (n == 0) throw Error(ErrorCode::kDomain, "generation(0) is undefined");
  const std::uint64_t b = scheme.base();
  std::uint32_t t = 0;
  std::uint64_t p = 1;
  while (p < n) {
    ++t;
    if (p > std::numeric_limits<std::uint64_t>::max() / b) break;
    p *= b;
  }
  return t;
}

Vertex Vertebra(const Scheme& scheme, std::uint32_t t) {
  if (!scheme.is_skip_list()) {
    throw Error(ErrorCode::kDomain, "vertebra requires a skip list scheme");
  }
  return Vertex::Inner(CheckedPow(scheme.base(), t), t);
}

}  // namespace slls
