#include "slls/codec.h"

#include <algorithm>

namespace slls::codec {
namespace {

constexpr std::size_t kHeaderSize = 6;
constexpr std::uint32_t kSinkLayer = 0xffffffff;

class Writer {
 public:
  Writer(std::string_view magic, const Scheme& scheme) {
    out_.insert(out_.end(), magic.begin(), magic.end());
    out_.push_back(kVersion);
    out_.push_back(scheme.tag());
  }

  void U8(std::uint8_t v) { out_.push_back(v); }
  void U32(std::uint32_t v) { BigEndian(v, 4); }
  void U64(std::uint64_t v) { BigEndian(v, 8); }
  void Hash(const Digest& d) {
    out_.insert(out_.end(), d.bytes.begin(), d.bytes.end());
  }

  Bytes Take() { return std::move(out_); }

 private:
  void BigEndian(std::uint64_t v, int width) {
    for (int i = width - 1; i >= 0; --i) {
      out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  Bytes out_;
};

// Sequential big-endian reader; every read checks the remaining size.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::size_t remaining() const { return in_.size() - pos_; }

  bool U8(std::uint8_t& v) {
    if (remaining() < 1) return false;
    v = in_[pos_++];
    return true;
  }
  bool U32(std::uint32_t& v) {
    std::uint64_t w;
    if (!BigEndian(w, 4)) return false;
    v = static_cast<std::uint32_t>(w);
    return true;
  }
  bool U64(std::uint64_t& v) { return BigEndian(v, 8); }
  bool Hash(Digest& d) {
    if (remaining() < Digest::kSize) return false;
    std::copy_n(in_.begin() + pos_, Digest::kSize, d.bytes.begin());
    pos_ += Digest::kSize;
    return true;
  }

  // Magic, version and scheme tag. Sets error on failure.
  std::optional<Scheme> Header(std::string_view magic, Malformed& error) {
    if (remaining() < kHeaderSize) {
      error = Malformed::kLength;
      return std::nullopt;
    }
    if (!std::equal(magic.begin(), magic.end(), in_.begin())) {
      error = Malformed::kMagic;
      return std::nullopt;
    }
    pos_ = magic.size();
    std::uint8_t version = 0;
    std::uint8_t tag = 0;
    U8(version);
    U8(tag);
    if (version != kVersion) {
      error = Malformed::kVersion;
      return std::nullopt;
    }
    try {
      return Scheme::FromTag(tag);
    } catch (const Error&) {
      error = Malformed::kScheme;
      return std::nullopt;
    }
  }

 private:
  bool BigEndian(std::uint64_t& v, int width) {
    if (remaining() < static_cast<std::size_t>(width)) return false;
    v = 0;
    for (int i = 0; i < width; ++i) v = v << 8 | in_[pos_++];
    return true;
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

template <typename T>
Decoded<T> Fail(Malformed m) {
  return Decoded<T>{std::nullopt, m};
}

}  // namespace

const char* MalformedName(Malformed m) {
  switch (m) {
    case Malformed::kNone:
      return "none";
    case Malformed::kLength:
      return "length";
    case Malformed::kMagic:
      return "magic";
    case Malformed::kVersion:
      return "version";
    case Malformed::kScheme:
      return "scheme";
    case Malformed::kRange:
      return "range";
    case Malformed::kVertex:
      return "vertex";
  }
  return "unknown";
}

Bytes EncodePrefixCert(const PrefixCert& cert) {
  Writer w(kPrefixMagic, cert.scheme);
  w.U64(cert.len_s);
  w.U64(cert.len_t);
  w.U32(static_cast<std::uint32_t>(cert.labels.size()));
  for (const Digest& d : cert.labels) w.Hash(d);
  return w.Take();
}

Decoded<PrefixCert> DecodePrefixCert(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  Malformed error = Malformed::kNone;
  const std::optional<Scheme> scheme = r.Header(kPrefixMagic, error);
  if (!scheme) return Fail<PrefixCert>(error);
  PrefixCert cert{*scheme, 0, 0, {}};
  std::uint32_t count = 0;
  if (!r.U64(cert.len_s) || !r.U64(cert.len_t) || !r.U32(count)) {
    return Fail<PrefixCert>(Malformed::kLength);
  }
  if (cert.len_s == 0 || cert.len_s > cert.len_t) {
    return Fail<PrefixCert>(Malformed::kRange);
  }
  if (r.remaining() != std::uint64_t{count} * Digest::kSize) {
    return Fail<PrefixCert>(Malformed::kLength);
  }
  cert.labels.resize(count);
  for (Digest& d : cert.labels) r.Hash(d);
  return Decoded<PrefixCert>{std::move(cert), Malformed::kNone};
}

Bytes EncodeLog(const Log& log) {
  Writer w(kLogMagic, log.scheme());
  w.U64(log.length());
  for (const Digest& d : log.item_hashes()) w.Hash(d);
  return w.Take();
}

Decoded<Log> DecodeLog(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  Malformed error = Malformed::kNone;
  const std::optional<Scheme> scheme = r.Header(kLogMagic, error);
  if (!scheme) return Fail<Log>(error);
  std::uint64_t length = 0;
  if (!r.U64(length)) return Fail<Log>(Malformed::kLength);
  if (length > r.remaining() / Digest::kSize ||
      r.remaining() != length * Digest::kSize) {
    return Fail<Log>(Malformed::kLength);
  }
  Log log(*scheme);
  for (std::uint64_t i = 0; i < length; ++i) {
    Digest d;
    r.Hash(d);
    log.AppendItemHash(d);
  }
  return Decoded<Log>{std::move(log), Malformed::kNone};
}

Bytes EncodePositionalCert(const PositionalCert& pc) {
  Writer w(kPositionalMagic, pc.scheme);
  w.U64(pc.n);
  w.U64(pc.round_length.value_or(0));
  w.U8(pc.chain_digest ? 0x01 : 0x00);
  w.U32(static_cast<std::uint32_t>(pc.entries.size()));
  for (const auto& [v, d] : pc.entries) {
    w.U64(v.position);
    w.U32(v.is_sink() ? kSinkLayer : v.layer);
    w.Hash(d);
  }
  if (pc.chain_digest) w.Hash(*pc.chain_digest);
  return w.Take();
}

Decoded<PositionalCert> DecodePositionalCert(
    std::span<const std::uint8_t> bytes) {
  constexpr std::size_t kEntrySize = 8 + 4 + Digest::kSize;
  Reader r(bytes);
  Malformed error = Malformed::kNone;
  const std::optional<Scheme> scheme = r.Header(kPositionalMagic, error);
  if (!scheme) return Fail<PositionalCert>(error);
  PositionalCert pc{*scheme, 0, std::nullopt, {}, std::nullopt};
  std::uint64_t round = 0;
  std::uint8_t flags = 0;
  std::uint32_t count = 0;
  if (!r.U64(pc.n) || !r.U64(round) || !r.U8(flags) || !r.U32(count)) {
    return Fail<PositionalCert>(Malformed::kLength);
  }
  if (pc.n == 0 || (flags & ~0x01) != 0 || (round != 0 && pc.n > round)) {
    return Fail<PositionalCert>(Malformed::kRange);
  }
  if (round != 0) pc.round_length = round;
  const bool chained = flags & 0x01;
  const std::uint64_t expected =
      std::uint64_t{count} * kEntrySize + (chained ? Digest::kSize : 0);
  if (r.remaining() != expected) return Fail<PositionalCert>(Malformed::kLength);
  pc.entries.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint64_t position = 0;
    std::uint32_t layer = 0;
    Digest d;
    r.U64(position);
    r.U32(layer);
    r.Hash(d);
    const Vertex v = layer == kSinkLayer ? Vertex::Sink(position)
                                         : Vertex::Inner(position, layer);
    if (!VertexValid(*scheme, v)) return Fail<PositionalCert>(Malformed::kVertex);
    pc.entries.emplace_back(v, d);
  }
  if (chained) {
    Digest d;
    r.Hash(d);
    pc.chain_digest = d;
  }
  return Decoded<PositionalCert>{std::move(pc), Malformed::kNone};
}

}  // namespace slls::codec
