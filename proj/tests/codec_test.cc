#include "slls/codec.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "test_util.h"

namespace slls::codec {
namespace {

using testing::S;
using testing::V;

const Scheme kBase2 = Scheme::SkipList(2);

Log MakeLog(const Scheme& scheme, Position length) {
  Log log(scheme);
  for (Position i = 1; i <= length; ++i) log.Append("item-" + std::to_string(i));
  return log;
}

TEST(PrefixCodecTest, Layout) {
  const Log log = MakeLog(kBase2, 13);
  const Bytes bytes = EncodePrefixCert(BuildPrefixCert(log, 5, 5));
  // 6-byte header, two 8-byte lengths, 4-byte count, 2 labels.
  EXPECT_EQ(bytes.size(), 90u);
  EXPECT_EQ(Bytes(bytes.begin(), bytes.begin() + 6),
            (Bytes{'S', 'L', 'C', 'P', 0x01, 0x02}));
  // len_s = 5, len_t = 5, count = 2, big-endian.
  EXPECT_EQ(bytes[13], 5);
  EXPECT_EQ(bytes[21], 5);
  EXPECT_EQ(bytes[25], 2);
  for (Position t = 1; t <= 13; ++t) {
    const PrefixCert cert = BuildPrefixCert(log, 1, t);
    EXPECT_EQ(EncodePrefixCert(cert).size(), 26 + 32 * cert.labels.size());
  }
}

TEST(PrefixCodecTest, RoundTrip) {
  const Log log = MakeLog(Scheme::SkipList(3), 30);
  for (Position t = 1; t <= 30; ++t) {
    for (Position s = 1; s <= t; ++s) {
      const PrefixCert cert = BuildPrefixCert(log, s, t);
      const Bytes bytes = EncodePrefixCert(cert);
      const auto decoded = DecodePrefixCert(bytes);
      ASSERT_TRUE(decoded.ok());
      ASSERT_EQ(*decoded.value, cert);
      ASSERT_EQ(EncodePrefixCert(*decoded.value), bytes);
    }
  }
}

TEST(PrefixCodecTest, Malformed) {
  const Bytes good = EncodePrefixCert(BuildPrefixCert(MakeLog(kBase2, 13), 6, 13));
  EXPECT_EQ(DecodePrefixCert(Bytes(good.begin(), good.end() - 1)).error,
            Malformed::kLength);
  EXPECT_EQ(DecodePrefixCert(Bytes(good.begin(), good.begin() + 3)).error,
            Malformed::kLength);
  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(DecodePrefixCert(trailing).error, Malformed::kLength);
  Bytes magic = good;
  std::fill_n(magic.begin(), 4, 'X');
  EXPECT_EQ(DecodePrefixCert(magic).error, Malformed::kMagic);
  Bytes version = good;
  version[4] = 0x02;
  EXPECT_EQ(DecodePrefixCert(version).error, Malformed::kVersion);
  Bytes scheme = good;
  scheme[5] = 0x07;
  EXPECT_EQ(DecodePrefixCert(scheme).error, Malformed::kScheme);
  Bytes order = good;
  std::swap_ranges(order.begin() + 6, order.begin() + 14, order.begin() + 14);
  EXPECT_EQ(DecodePrefixCert(order).error, Malformed::kRange);
  EXPECT_EQ(DecodePrefixCert(Bytes{}).error, Malformed::kLength);
}

TEST(LogCodecTest, RoundTrip) {
  const Log empty(kBase2);
  EXPECT_EQ(EncodeLog(empty).size(), 14u);
  for (const Scheme& scheme : {kBase2, Scheme::SkipList(3), Scheme::Linear(),
                               Scheme::AntimonotoneBinary(),
                               Scheme::SkipList(10)}) {
    const Log log = MakeLog(scheme, 50);
    const Bytes bytes = EncodeLog(log);
    EXPECT_EQ(bytes.size(), 14 + 32 * 50u);
    const auto decoded = DecodeLog(bytes);
    ASSERT_TRUE(decoded.ok());
    EXPECT_EQ(decoded.value->scheme(), scheme);
    EXPECT_EQ(decoded.value->digest(), log.digest());
    EXPECT_EQ(EncodeLog(*decoded.value), bytes);
  }
}

TEST(LogCodecTest, CountMismatch) {
  Bytes bytes = EncodeLog(MakeLog(kBase2, 2));
  bytes[13] = 3;
  EXPECT_EQ(DecodeLog(bytes).error, Malformed::kLength);
  // A huge declared length must not allocate.
  std::fill(bytes.begin() + 6, bytes.begin() + 14, 0xff);
  EXPECT_EQ(DecodeLog(bytes).error, Malformed::kLength);
}

TEST(PositionalCodecTest, RoundTrip) {
  Log log = MakeLog(kBase2, 16);
  log.set_chain_digest(HashItem("previous"));
  for (const auto& [round, chained] :
       std::vector<std::pair<std::optional<Position>, bool>>{
           {std::nullopt, false}, {16, false}, {16, true}}) {
    for (Position n = 1; n <= 16; ++n) {
      const PositionalCert pc = ExtractPositionalCert(log, n, round, chained);
      const Bytes bytes = EncodePositionalCert(pc);
      EXPECT_EQ(bytes.size(), 6 + 8 + 8 + 1 + 4 + 44 * pc.entries.size() +
                                  (chained ? 32 : 0));
      const auto decoded = DecodePositionalCert(bytes);
      ASSERT_TRUE(decoded.ok());
      EXPECT_EQ(*decoded.value, pc);
      EXPECT_EQ(CommitDigest(*decoded.value), log.DigestAt(n));
    }
  }
}

TEST(PositionalCodecTest, SinksAndMalformed) {
  const PositionalCert pc =
      ExtractPositionalCert(MakeLog(kBase2, 8), 8, std::nullopt, false);
  ASSERT_EQ(pc.entries.front().first, S(8));
  const Bytes good = EncodePositionalCert(pc);
  // First entry starts after the 27-byte fixed part; sink layer is all ones.
  EXPECT_EQ(good[27 + 8], 0xff);
  Bytes flags = good;
  flags[22] = 0x02;
  EXPECT_EQ(DecodePositionalCert(flags).error, Malformed::kRange);
  Bytes vertex = good;
  vertex[27 + 8] = 0;
  vertex[27 + 9] = 0;
  vertex[27 + 10] = 0;
  vertex[27 + 11] = 5;  // (8,5) is not a vertex
  EXPECT_EQ(DecodePositionalCert(vertex).error, Malformed::kVertex);
  Bytes truncated(good.begin(), good.end() - 5);
  EXPECT_EQ(DecodePositionalCert(truncated).error, Malformed::kLength);
}

TEST(FuzzTest, DecodersSurviveRandomBytes) {
  std::mt19937_64 rng(7);
  const Bytes seed_prefix =
      EncodePrefixCert(BuildPrefixCert(MakeLog(kBase2, 13), 6, 13));
  const Bytes seed_log = EncodeLog(MakeLog(kBase2, 3));
  const Bytes seed_pc = EncodePositionalCert(
      ExtractPositionalCert(MakeLog(kBase2, 8), 8, std::nullopt, false));
  for (int i = 0; i < 100000; ++i) {
    Bytes in;
    switch (i % 4) {
      case 0:
        in.resize(rng() % 128);
        for (auto& b : in) b = static_cast<std::uint8_t>(rng());
        break;
      case 1:
        in = seed_prefix;
        break;
      case 2:
        in = seed_log;
        break;
      default:
        in = seed_pc;
    }
    if (i % 4 != 0) {
      for (int flips = 1 + rng() % 4; flips > 0; --flips) {
        in[rng() % in.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
      }
    }
    const auto p = DecodePrefixCert(in);
    if (p.ok()) {
      EXPECT_EQ(EncodePrefixCert(*p.value), in);
      VerifyPrefixCert(*p.value, Digest{}, Digest{});
    }
    const auto l = DecodeLog(in);
    if (l.ok()) EXPECT_EQ(EncodeLog(*l.value), in);
    const auto c = DecodePositionalCert(in);
    if (c.ok()) {
      EXPECT_EQ(EncodePositionalCert(*c.value), in);
      try {
        CommitDigest(*c.value);
      } catch (const Error&) {
      }
    }
  }
}

}  // namespace
}  // namespace slls::codec
