// Byte-exact file formats. All integers are fixed-width big-endian.
//
//   header  = magic(4) || version 0x01 || scheme tag(1)
//   SLOG    = header || length(8) || length x item hash(32)
//   SLCP    = header || len_s(8) || len_t(8) || count(4) || count x label(32)
//   SLPC    = header || n(8) || round length(8, 0 = unbounded) || flags(1)
//             || count(4) || count x (position(8) || layer(4) || label(32))
//             || [chain digest(32) when flags bit 0 is set]

#ifndef SLLS_CODEC_H_
#define SLLS_CODEC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "slls/authenticator.h"

namespace slls::codec {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::string_view kLogMagic = "SLOG";
inline constexpr std::string_view kPrefixMagic = "SLCP";
inline constexpr std::string_view kPositionalMagic = "SLPC";

// The first field a decoder found wrong.
enum class Malformed {
  kNone,
  kLength,   // truncated, trailing bytes, or count disagreeing with size
  kMagic,
  kVersion,
  kScheme,   // unknown scheme tag
  kRange,    // len_s > len_t, zero positions, bad flags
  kVertex,   // entry is not a valid vertex of the scheme
};

const char* MalformedName(Malformed m);

template <typename T>
struct Decoded {
  std::optional<T> value;
  Malformed error = Malformed::kNone;

  bool ok() const { return value.has_value(); }
};

Bytes EncodePrefixCert(const PrefixCert& cert);
Decoded<PrefixCert> DecodePrefixCert(std::span<const std::uint8_t> bytes);

Bytes EncodeLog(const Log& log);
// Labels are recomputed while replaying the item hashes.
Decoded<Log> DecodeLog(std::span<const std::uint8_t> bytes);

Bytes EncodePositionalCert(const PositionalCert& pc);
Decoded<PositionalCert> DecodePositionalCert(
    std::span<const std::uint8_t> bytes);

}  // namespace slls::codec

#endif  // SLLS_CODEC_H_
