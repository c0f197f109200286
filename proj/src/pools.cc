#include "slls/pools.h"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace slls {
namespace {

void RequireSkipList(const Scheme& scheme) {
  if (!scheme.is_skip_list()) {
    throw Error(ErrorCode::kDomain, "pools are defined for skip list schemes");
  }
}

}  // namespace

std::vector<Vertex> CertPool::Vertices() const {
  std::vector<Vertex> all;
  for (const Path& p : components) {
    all.insert(all.end(), p.vertices.begin(), p.vertices.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool CertPool::Contains(const Vertex& v) const {
  return std::any_of(components.begin(), components.end(),
                     [&](const Path& p) { return p.Contains(v); });
}

Position CertPool::MaxPosition() const {
  Position m = 0;
  for (const Path& p : components) {
    for (const Vertex& v : p.vertices) m = std::max(m, v.position);
  }
  return m;
}

CertPool CertificatePool(const Scheme& scheme, Position n) {
  RequireSkipList(scheme);
  if (n == 0) throw Error(ErrorCode::kDomain, "pool of 0 is undefined");
  CertPool pool{scheme, n, {}, std::nullopt};
  const std::uint32_t t = Generation(scheme, n);
  if (t == 0) {
    pool.components.push_back(Path{scheme, {Vertex::Inner(1, 0)}});
    return pool;
  }
  const Vertex commit = Commit(scheme, n);
  const Vertex top = Vertebra(scheme, t);
  const Vertex previous = Vertebra(scheme, t - 1);
  pool.components.push_back(GreedyPath(scheme, top, commit));
  pool.components.push_back(GreedyPath(scheme, commit, previous));
  pool.components.push_back(GreedyPath(scheme, previous, Vertex::Inner(1, 0)));
  return pool;
}

std::uint32_t RoundExponent(const Scheme& scheme, Position round_length) {
  RequireSkipList(scheme);
  if (round_length < 2) {
    throw Error(ErrorCode::kDomain, "round length must be b^T with T >= 1");
  }
  const std::uint32_t t = Generation(scheme, round_length);
  if (CheckedPow(scheme.base(), t) != round_length) {
    throw Error(ErrorCode::kDomain,
                "round length " + std::to_string(round_length) +
                    " is not a power of " + std::to_string(scheme.base()));
  }
  return t;
}

CertPool BoundedPool(const Scheme& scheme, Position n, Position round_length) {
  const std::uint32_t round_exp = RoundExponent(scheme, round_length);
  if (n == 0 || n > round_length) {
    throw Error(ErrorCode::kDomain, "bounded pool requires 1 <= n <= N");
  }
  CertPool pool{scheme, n, {}, round_length};
  const Vertex round_top = Vertex::Inner(round_length, round_exp);
  if (n == 1) {
    pool.components.push_back(
        GreedyPath(scheme, round_top, Vertex::Inner(1, 0)));
    return pool;
  }
  const std::uint32_t t = Generation(scheme, n);
  const Vertex commit = Commit(scheme, n);
  Path tail = GreedyPath(scheme, commit, Vertebra(scheme, t - 1));
  tail.vertices.pop_back();  // stop just before the previous vertebra
  if (t == round_exp) {
    pool.components.push_back(GreedyPath(scheme, round_top, commit));
  } else {
    const Vertex top = Vertebra(scheme, t);
    pool.components.push_back(GreedyPath(scheme, round_top, top));
    pool.components.push_back(GreedyPath(scheme, top, commit));
  }
  pool.components.push_back(std::move(tail));
  return pool;
}

std::vector<Vertex> ExclusiveOutNeighborhood(const CertPool& pool) {
  const std::vector<Vertex> members = pool.Vertices();
  const auto in_pool = [&](const Vertex& v) {
    return std::binary_search(members.begin(), members.end(), v);
  };
  std::unordered_set<Vertex> seen;
  std::vector<Vertex> out;
  for (const Path& p : pool.components) {
    for (const Vertex& v : p.vertices) {
      for (const Vertex& w : OutNeighbors(pool.scheme, v)) {
        if (in_pool(w) || !seen.insert(w).second) continue;
        out.push_back(w);
      }
    }
  }
  return out;
}

std::vector<Vertex> PositionalVertices(const Scheme& scheme, Position n) {
  return ExclusiveOutNeighborhood(CertificatePool(scheme, n));
}

BoundedPositional BoundedPositionalVertices(const Scheme& scheme, Position n,
                                            Position round_length,
                                            bool chained) {
  return BoundedPositional{
      ExclusiveOutNeighborhood(BoundedPool(scheme, n, round_length)), chained};
}

}  // namespace slls
