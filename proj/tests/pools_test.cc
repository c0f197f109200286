#include "slls/pools.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "test_util.h"

namespace slls {
namespace {

using testing::S;
using testing::V;

const Scheme kBase2 = Scheme::SkipList(2);
const Scheme kBase3 = Scheme::SkipList(3);

std::set<Vertex> AsSet(const std::vector<Vertex>& v) {
  return std::set<Vertex>(v.begin(), v.end());
}

TEST(CertificatePoolTest, Examples) {
  EXPECT_EQ(CertificatePool(kBase2, 8).Vertices(),
            (std::vector<Vertex>{V(1, 0), V(2, 0), V(2, 1), V(4, 1), V(4, 2),
                                 V(6, 1), V(7, 0), V(8, 0), V(8, 1), V(8, 2),
                                 V(8, 3)}));
  EXPECT_EQ(CertificatePool(kBase2, 1).Vertices(),
            (std::vector<Vertex>{V(1, 0)}));
  EXPECT_EQ(CertificatePool(kBase3, 3).Vertices(),
            (std::vector<Vertex>{V(1, 0), V(2, 0), V(3, 0), V(3, 1)}));
}

TEST(CertificatePoolTest, MatchesOracle) {
  for (std::uint64_t b : {2, 3}) {
    const Scheme scheme = Scheme::SkipList(b);
    for (Position n = 1; n <= 300; ++n) {
      const CertPool pool = CertificatePool(scheme, n);
      const std::set<Vertex> oracle = testing::OraclePool(b, n);
      ASSERT_EQ(AsSet(pool.Vertices()), oracle) << b << " " << n;
      ASSERT_EQ(AsSet(ExclusiveOutNeighborhood(pool)),
                testing::OracleOutNeighborhood(b, oracle))
          << b << " " << n;
      ASSERT_EQ(pool.MaxPosition(),
                testing::OracleVertebra(b, testing::OracleCeilLog(b, n)).position);
    }
  }
}

TEST(PositionalVerticesTest, Examples) {
  EXPECT_EQ(PositionalVertices(kBase2, 8),
            (std::vector<Vertex>{S(8), S(7), V(6, 0), V(4, 0), S(2), S(1)}));
  EXPECT_EQ(PositionalVertices(kBase3, 3),
            (std::vector<Vertex>{S(3), S(2), S(1)}));
  EXPECT_EQ(PositionalVertices(kBase2, 70).size(), 14u);
}

TEST(PositionalVerticesTest, SmallSizes) {
  const std::vector<std::size_t> base2 = {1, 2, 4, 4};
  for (Position n = 1; n <= 4; ++n) {
    EXPECT_EQ(PositionalVertices(kBase2, n).size(), base2[n - 1]) << n;
  }
  EXPECT_EQ(PositionalVertices(kBase3, 1).size(), 1u);
}

// Base-3 sizes under the uniform jump rule, measured independently by the
// BFS oracle pool.
TEST(PositionalVerticesTest, Base3MeasuredLaw) {
  for (Position n = 4; n <= 250; ++n) {
    const std::size_t size = PositionalVertices(kBase3, n).size();
    ASSERT_EQ(size, testing::OracleOutNeighborhood(3, testing::OraclePool(3, n)).size());
    ASSERT_EQ(size, 4 * testing::OracleCeilLog(3, n) - 1) << n;
  }
}

TEST(BoundedPoolTest, Examples) {
  const CertPool pool = BoundedPool(kBase2, 3, 16);
  EXPECT_EQ(pool.Vertices(),
            (std::vector<Vertex>{V(3, 0), V(4, 0), V(4, 1), V(4, 2), V(8, 2),
                                 V(8, 3), V(16, 3), V(16, 4)}));
  EXPECT_EQ(ExclusiveOutNeighborhood(pool),
            (std::vector<Vertex>{V(16, 2), V(8, 1), V(2, 1), S(4), S(3)}));
  EXPECT_EQ(ExclusiveOutNeighborhood(BoundedPool(kBase2, 12, 16)),
            (std::vector<Vertex>{V(8, 3), V(16, 1), S(12), S(11), V(10, 0)}));
}

TEST(BoundedPoolTest, Errors) {
  try {
    BoundedPool(kBase2, 20, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
  EXPECT_THROW(BoundedPool(kBase2, 3, 15), Error);
  EXPECT_THROW(BoundedPool(kBase2, 1, 1), Error);
  EXPECT_THROW(BoundedPool(kBase3, 3, 16), Error);
  EXPECT_EQ(RoundExponent(kBase3, 27), 3u);
}

TEST(BoundedPositionalTest, Examples) {
  EXPECT_EQ(BoundedPositionalVertices(kBase2, 3, 16, false).size(), 5u);
  const BoundedPositional chained = BoundedPositionalVertices(kBase2, 3, 16, true);
  EXPECT_EQ(chained.size(), 6u);
  EXPECT_TRUE(chained.chain_slot);
  EXPECT_EQ(BoundedPositionalVertices(kBase2, 12, 16, false).size(), 5u);
}

TEST(BoundedPositionalTest, FirstPositionSizes) {
  const std::vector<std::pair<Position, std::size_t>> want = {
      {16, 5}, {64, 7}, {256, 9}, {1024, 11}};
  for (const auto& [round, size] : want) {
    EXPECT_EQ(BoundedPositionalVertices(kBase2, 1, round, false).size(), size);
  }
}

TEST(BoundedPositionalTest, StaysInsideRound) {
  for (Position n = 1; n <= 64; ++n) {
    EXPECT_LE(BoundedPool(kBase2, n, 64).MaxPosition(), 64u);
  }
}

}  // namespace
}  // namespace slls
