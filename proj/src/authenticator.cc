#include "slls/authenticator.h"

#include <algorithm>
#include <string>

namespace slls {
namespace {

Layer TopLayer(const Scheme& scheme, Position n) {
  return scheme.is_skip_list() ? MaxPow(scheme.base(), n) : 0;
}

// Post-order evaluation of v's label from item hashes alone.
Digest ComputeUncached(const Scheme& scheme, std::span<const Digest> items,
                       const Vertex& root,
                       std::unordered_map<Vertex, Digest>& memo) {
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    if (memo.contains(v)) {
      stack.pop_back();
      continue;
    }
    if (v.is_sink()) {
      memo.emplace(v, items[v.position - 1]);
      stack.pop_back();
      continue;
    }
    const Neighbors out = OutNeighbors(scheme, v);
    bool ready = true;
    for (const Vertex& w : out) {
      if (!memo.contains(w)) {
        stack.push_back(w);
        ready = false;
      }
    }
    if (!ready) continue;
    SmallVector<Digest, 3> children;
    for (const Vertex& w : out) children.push_back(memo.at(w));
    memo.emplace(v, InnerLabel(scheme, children.span()));
    stack.pop_back();
  }
  return memo.at(root);
}

void RequirePositionalShape(const PositionalCert& pc, const CertPool& pool) {
  const std::vector<Vertex> expected = ExclusiveOutNeighborhood(pool);
  bool same = expected.size() == pc.entries.size();
  for (std::size_t i = 0; same && i < expected.size(); ++i) {
    same = expected[i] == pc.entries[i].first;
  }
  if (!same) {
    throw Error(ErrorCode::kMalformed,
                "positional certificate entries do not match the pool of " +
                    std::to_string(pc.n));
  }
}

}  // namespace

Digest InnerLabel(const Scheme& scheme, std::span<const Digest> children) {
  Sha256 h;
  h.Update(std::uint8_t{0x01});
  h.Update(scheme.tag());
  for (const Digest& c : children) h.Update(c);
  return h.Finish();
}

Digest Log::Append(std::span<const std::uint8_t> item) {
  return AppendItemHash(HashItem(item));
}

Digest Log::AppendItemHash(const Digest& item_hash) {
  items_.push_back(item_hash);
  const Position n = items_.size();
  offsets_.push_back(labels_.size());
  const Layer top = TopLayer(scheme_, n);
  for (Layer k = 0; k <= top; ++k) {
    SmallVector<Digest, 3> children;
    for (const Vertex& w : OutNeighbors(scheme_, Vertex::Inner(n, k))) {
      children.push_back(Label(w));
    }
    labels_.push_back(InnerLabel(scheme_, children.span()));
  }
  return labels_[offsets_.back()];
}

void Log::RequireCovered(const Vertex& v) const {
  if (!VertexValid(scheme_, v)) {
    throw Error(ErrorCode::kDomain, "invalid vertex " + v.ToString());
  }
  if (v.position > length()) {
    throw Error(ErrorCode::kInsufficientData,
                v.ToString() + " needs log length " +
                    std::to_string(v.position) + ", have " +
                    std::to_string(length()));
  }
}

Digest Log::Label(const Vertex& v) const {
  RequireCovered(v);
  if (v.is_sink()) return items_[v.position - 1];
  return labels_[offsets_[v.position - 1] + v.layer];
}

Digest Log::RecomputeLabel(const Vertex& v) const {
  RequireCovered(v);
  std::unordered_map<Vertex, Digest> memo;
  return ComputeUncached(scheme_, items_, v, memo);
}

bool Log::VerifyCache() const {
  std::unordered_map<Vertex, Digest> memo;
  for (Position n = 1; n <= length(); ++n) {
    for (Layer k = 0; k <= TopLayer(scheme_, n); ++k) {
      const Vertex v = Vertex::Inner(n, k);
      if (ComputeUncached(scheme_, items_, v, memo) != Label(v)) return false;
    }
  }
  return true;
}

std::vector<Vertex> PrefixCertVertices(const Scheme& scheme, Position len_s,
                                       Position len_t) {
  const Path path =
      CanonicalPath(scheme, Commit(scheme, len_t), Commit(scheme, len_s));
  return OffPathOutNeighbors(path, /*exclude_final_vertex=*/len_s < len_t);
}

PrefixCert BuildPrefixCert(const Log& log, Position len_s, Position len_t) {
  if (len_s == 0 || len_s > len_t || len_t > log.length()) {
    throw Error(ErrorCode::kOutOfRange,
                "prefix certificate needs 1 <= s <= t <= " +
                    std::to_string(log.length()));
  }
  PrefixCert cert{log.scheme(), len_s, len_t, {}};
  for (const Vertex& v : PrefixCertVertices(log.scheme(), len_s, len_t)) {
    cert.labels.push_back(log.Label(v));
  }
  return cert;
}

const char* VerifyResultName(VerifyResult r) {
  switch (r) {
    case VerifyResult::kAccept:
      return "accept";
    case VerifyResult::kLengthMismatch:
      return "length-mismatch";
    case VerifyResult::kDigestMismatch:
      return "digest-mismatch";
    case VerifyResult::kMalformed:
      return "malformed";
  }
  return "unknown";
}

VerifyResult VerifyPrefixCert(const PrefixCert& cert, const Digest& digest_s,
                              const Digest& digest_t) {
  if (cert.len_s == 0 || cert.len_s > cert.len_t) return VerifyResult::kMalformed;
  const Scheme& scheme = cert.scheme;
  // Outside skip lists every path vertex has its own sink off the path, so
  // the label count caps the path length. Skip list paths are logarithmic.
  const std::size_t cap =
      scheme.is_skip_list() ? SIZE_MAX : cert.labels.size() + 1;
  std::optional<Path> maybe_path;
  try {
    maybe_path = CanonicalPath(scheme, Commit(scheme, cert.len_t),
                               Commit(scheme, cert.len_s), cap);
  } catch (const Error& e) {
    return e.code() == ErrorCode::kBoundExceeded ? VerifyResult::kLengthMismatch
                                                 : VerifyResult::kMalformed;
  }
  const Path& path = *maybe_path;
  const bool same = cert.len_s == cert.len_t;
  const std::vector<Vertex> off = OffPathOutNeighbors(path, !same);
  if (off.size() != cert.labels.size()) return VerifyResult::kLengthMismatch;

  std::unordered_map<Vertex, Digest> known;
  for (std::size_t i = 0; i < off.size(); ++i) known.emplace(off[i], cert.labels[i]);
  if (!same) known.emplace(path.back(), digest_s);
  // Neighbors lie strictly later on the path, so walking backwards sees
  // every on-path child before its parent.
  const std::size_t end = path.vertices.size() - (same ? 0 : 1);
  for (std::size_t i = end; i-- > 0;) {
    const Vertex& v = path.vertices[i];
    SmallVector<Digest, 3> children;
    for (const Vertex& w : OutNeighbors(scheme, v)) {
      children.push_back(known.at(w));
    }
    known.insert_or_assign(v, InnerLabel(scheme, children.span()));
  }
  const Digest& top = known.at(path.front());
  if (top != digest_t) return VerifyResult::kDigestMismatch;
  if (same && digest_s != digest_t) return VerifyResult::kDigestMismatch;
  return VerifyResult::kAccept;
}

VerifyResult VerifyPrefixCert(const PrefixCert& cert, Position len_s,
                              const Digest& digest_s, Position len_t,
                              const Digest& digest_t) {
  if (cert.len_s != len_s || cert.len_t != len_t) {
    return VerifyResult::kLengthMismatch;
  }
  return VerifyPrefixCert(cert, digest_s, digest_t);
}

CertPool PoolFor(const Scheme& scheme, Position n,
                 std::optional<Position> round_length) {
  return round_length ? BoundedPool(scheme, n, *round_length)
                      : CertificatePool(scheme, n);
}

PositionalCert ExtractPositionalCert(const Log& log, Position n,
                                     std::optional<Position> round_length,
                                     bool chained) {
  const CertPool pool = PoolFor(log.scheme(), n, round_length);
  if (pool.MaxPosition() > log.length()) {
    throw Error(ErrorCode::kInsufficientData,
                "pool of " + std::to_string(n) + " reaches position " +
                    std::to_string(pool.MaxPosition()) + ", log length is " +
                    std::to_string(log.length()));
  }
  PositionalCert pc{log.scheme(), n, round_length, {}, std::nullopt};
  for (const Vertex& v : ExclusiveOutNeighborhood(pool)) {
    pc.entries.emplace_back(v, log.Label(v));
  }
  if (chained) {
    if (!log.chain_digest()) {
      throw Error(ErrorCode::kInsufficientData,
                  "chained certificate requested but the log has no "
                  "previous round digest");
    }
    pc.chain_digest = log.chain_digest();
  }
  return pc;
}

std::unordered_map<Vertex, Digest> PoolLabels(const PositionalCert& pc) {
  const CertPool pool = PoolFor(pc.scheme, pc.n, pc.round_length);
  RequirePositionalShape(pc, pool);
  std::unordered_map<Vertex, Digest> labels(pc.entries.begin(),
                                            pc.entries.end());
  // Ascending order puts every child before its parent.
  for (const Vertex& v : pool.Vertices()) {
    SmallVector<Digest, 3> children;
    for (const Vertex& w : OutNeighbors(pc.scheme, v)) {
      auto it = labels.find(w);
      if (it == labels.end()) {
        throw Error(ErrorCode::kMissingLabel,
                    "no label for " + w.ToString() + " in pool of " +
                        std::to_string(pc.n));
      }
      children.push_back(it->second);
    }
    labels.emplace(v, InnerLabel(pc.scheme, children.span()));
  }
  return labels;
}

Digest CommitDigest(const PositionalCert& pc) {
  return PoolLabels(pc).at(Commit(pc.scheme, pc.n));
}

PrefixCert AssemblePrefixFromPools(const PositionalCert& pc_s,
                                   const PositionalCert& pc_t) {
  if (!(pc_s.scheme == pc_t.scheme)) {
    throw Error(ErrorCode::kDomain, "positional certificates use different schemes");
  }
  if (pc_s.n > pc_t.n) {
    throw Error(ErrorCode::kDomain, "assembly requires pc_s.n <= pc_t.n");
  }
  std::unordered_map<Vertex, Digest> labels = PoolLabels(pc_s);
  labels.merge(PoolLabels(pc_t));

  PrefixCert cert{pc_s.scheme, pc_s.n, pc_t.n, {}};
  for (const Vertex& v : PrefixCertVertices(cert.scheme, cert.len_s, cert.len_t)) {
    auto it = labels.find(v);
    if (it == labels.end()) {
      throw Error(ErrorCode::kMissingLabel,
                  "pools of " + std::to_string(pc_s.n) + " and " +
                      std::to_string(pc_t.n) + " lack a label for " +
                      v.ToString());
    }
    cert.labels.push_back(it->second);
  }
  return cert;
}

}  // namespace slls
