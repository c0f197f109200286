#ifndef SLLS_DIGEST_H_
#define SLLS_DIGEST_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace slls {

// A SHA-256 output.
struct Digest {
  static constexpr std::size_t kSize = 32;
  std::array<std::uint8_t, kSize> bytes{};

  std::string ToHex() const;  // lowercase, no prefix
  static std::optional<Digest> FromHex(std::string_view hex);

  friend auto operator<=>(const Digest&, const Digest&) = default;
};

// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& Update(std::span<const std::uint8_t> data);
  Sha256& Update(std::uint8_t byte) { return Update({&byte, 1}); }
  Sha256& Update(const Digest& d) { return Update(d.bytes); }
  Digest Finish();

 private:
  struct Impl;
  Impl* impl_;
};

// H(0x00 || item).
Digest HashItem(std::span<const std::uint8_t> item);
Digest HashItem(std::string_view item);

}  // namespace slls

#endif  // SLLS_DIGEST_H_
