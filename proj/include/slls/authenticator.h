// Hash labels over an append-only log, and prefix / positional
// certificates built from them.
//
// Sink n is labeled with the hash of item n. An inner vertex is labeled
// H(0x01 || scheme tag || labels of its out-neighbors in canonical order).

#ifndef SLLS_AUTHENTICATOR_H_
#define SLLS_AUTHENTICATOR_H_

#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slls/digest.h"
#include "slls/pools.h"

namespace slls {

// Label of an inner vertex from its children's labels.
Digest InnerLabel(const Scheme& scheme, std::span<const Digest> children);

// Append-only log with eagerly computed labels. Appending position n
// labels every vertex at n; all of their out-neighbors already exist.
// One writer; concurrent readers are fine between writes.
class Log {
 public:
  explicit Log(const Scheme& scheme) : scheme_(scheme) {}

  const Scheme& scheme() const { return scheme_; }
  Position length() const { return items_.size(); }
  std::span<const Digest> item_hashes() const { return items_; }

  // Returns the new log digest, label(commit(length)).
  Digest Append(std::span<const std::uint8_t> item);
  Digest Append(std::string_view item) { return AppendItemHash(HashItem(item)); }
  Digest AppendItemHash(const Digest& item_hash);

  // Throws Error(kInsufficientData) past the current length.
  Digest Label(const Vertex& v) const;
  Digest DigestAt(Position n) const { return Label(Commit(scheme_, n)); }
  Digest digest() const { return DigestAt(length()); }

  // Label computed from item hashes alone, bypassing the cache.
  Digest RecomputeLabel(const Vertex& v) const;
  // Every cached label equals its recomputation.
  bool VerifyCache() const;

  // Digest of the previous timestamping round, for chained certificates.
  const std::optional<Digest>& chain_digest() const { return chain_digest_; }
  void set_chain_digest(const Digest& d) { chain_digest_ = d; }

 private:
  void RequireCovered(const Vertex& v) const;

  Scheme scheme_;
  std::vector<Digest> items_;
  std::vector<std::size_t> offsets_;  // first label of each position
  std::vector<Digest> labels_;
  std::optional<Digest> chain_digest_;
};

struct PrefixCert {
  Scheme scheme;
  Position len_s = 0;
  Position len_t = 0;
  std::vector<Digest> labels;

  friend bool operator==(const PrefixCert&, const PrefixCert&) = default;
};

// Vertices whose labels a prefix certificate carries, in order: off-path
// neighbors of the canonical path commit(t) -> commit(s), without the
// final vertex's own neighbors unless s == t.
std::vector<Vertex> PrefixCertVertices(const Scheme& scheme, Position len_s,
                                       Position len_t);

PrefixCert BuildPrefixCert(const Log& log, Position len_s, Position len_t);

enum class VerifyResult {
  kAccept,
  kLengthMismatch,
  kDigestMismatch,
  kMalformed,
};

const char* VerifyResultName(VerifyResult r);

// Checks that the certificate links digest_s to digest_t at the lengths it
// names. Labels carry no positions, so a certificate whose length fields are
// altered can still verify when both canonical paths have the same shape.
// Callers that know the lengths should use the overload below.
VerifyResult VerifyPrefixCert(const PrefixCert& cert, const Digest& digest_s,
                              const Digest& digest_t);

// As above, and rejects with kLengthMismatch unless the certificate names
// exactly len_s and len_t.
VerifyResult VerifyPrefixCert(const PrefixCert& cert, Position len_s,
                              const Digest& digest_s, Position len_t,
                              const Digest& digest_t);

struct PositionalCert {
  Scheme scheme;
  Position n = 0;
  std::optional<Position> round_length;
  std::vector<std::pair<Vertex, Digest>> entries;
  std::optional<Digest> chain_digest;

  friend bool operator==(const PositionalCert&, const PositionalCert&) =
      default;
};

// The pool a positional certificate refers to.
CertPool PoolFor(const Scheme& scheme, Position n,
                 std::optional<Position> round_length);

PositionalCert ExtractPositionalCert(const Log& log, Position n,
                                     std::optional<Position> round_length,
                                     bool chained);

// Labels of every pool vertex, rebuilt from the certificate's entries.
// Throws Error(kMalformed) if the entries do not match the pool's
// out-neighborhood.
std::unordered_map<Vertex, Digest> PoolLabels(const PositionalCert& pc);

// label(commit(n)) as implied by a positional certificate.
Digest CommitDigest(const PositionalCert& pc);

// Combines the positional certificates of s <= t into the prefix
// certificate for (s, t), equal to BuildPrefixCert on the full log.
PrefixCert AssemblePrefixFromPools(const PositionalCert& pc_s,
                                   const PositionalCert& pc_t);

}  // namespace slls

#endif  // SLLS_AUTHENTICATOR_H_
