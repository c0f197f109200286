#include "slls/paths.h"

#include <gtest/gtest.h>

#include <vector>

#include "test_util.h"

namespace slls {
namespace {

using testing::OracleShortest;
using testing::S;
using testing::V;

const Scheme kBase2 = Scheme::SkipList(2);
const Scheme kBase3 = Scheme::SkipList(3);

TEST(GreedyPathTest, Examples) {
  EXPECT_EQ(GreedyPath(kBase2, V(13, 0), V(6, 0)).vertices,
            (std::vector<Vertex>{V(13, 0), V(12, 2), V(8, 3), V(8, 2), V(8, 1),
                                 V(6, 1), V(6, 0)}));
  EXPECT_EQ(GreedyPath(kBase2, V(8, 3), V(8, 0)).vertices,
            (std::vector<Vertex>{V(8, 3), V(8, 2), V(8, 1), V(8, 0)}));
  EXPECT_EQ(GreedyPath(kBase3, V(3, 1), V(1, 0)).vertices,
            (std::vector<Vertex>{V(3, 1), V(3, 0), V(2, 0), V(1, 0)}));
  EXPECT_EQ(GreedyPath(kBase2, V(5, 0), V(5, 0)).vertices,
            (std::vector<Vertex>{V(5, 0)}));
}

TEST(GreedyPathTest, Errors) {
  try {
    GreedyPath(kBase2, V(4, 0), V(7, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreachable);
  }
  try {
    GreedyPath(kBase2, V(6, 2), V(1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
  EXPECT_THROW(GreedyPath(kBase2, V(8, 0), V(8, 1)), Error);
  EXPECT_THROW(GreedyPath(Scheme::Linear(), V(3, 0), V(1, 0)), Error);
}

TEST(GreedyPathTest, HugePositions) {
  const Position n = std::uint64_t{1} << 62;
  const Path p = GreedyPath(kBase2, V(n + 12345, 0), V(7, 0));
  EXPECT_TRUE(IsValidPath(p));
  EXPECT_LT(p.vertices.size(), 200u);
}

// Greedy is the unique shortest path: same length as the all-shortest-paths
// oracle, and the oracle finds exactly one.
TEST(GreedyPathTest, UniqueShortestAgainstOracle) {
  for (std::uint64_t b : {2, 3}) {
    const Scheme scheme = Scheme::SkipList(b);
    for (Position t = 2; t <= 90; ++t) {
      for (Position s = 1; s < t; ++s) {
        const Path p = GreedyPath(scheme, V(t, 0), V(s, 0));
        const auto info = OracleShortest(b, V(t, 0), V(s, 0));
        ASSERT_EQ(p.edge_count(), info.length) << b << ": " << s << " " << t;
        ASSERT_EQ(info.path_count, 1u) << b << ": " << s << " " << t;
        ASSERT_TRUE(IsValidPath(p));
      }
    }
  }
}

TEST(BfsPathTest, Examples) {
  const auto p = BfsPath(kBase2, V(13, 0), V(6, 0));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->edge_count(), 6u);
  EXPECT_EQ(BfsPath(kBase2, V(5, 0), V(5, 0))->vertices,
            (std::vector<Vertex>{V(5, 0)}));
  EXPECT_FALSE(BfsPath(kBase2, V(4, 0), V(7, 0)).has_value());
  EXPECT_THROW(BfsPath(kBase2, V(std::uint64_t{1} << 21, 0), V(1, 0)), Error);
}

TEST(BfsPathTest, ReachesSinks) {
  const auto p = BfsPath(kBase2, V(8, 3), S(5));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(IsValidPath(*p));
  EXPECT_EQ(p->back(), S(5));
}

TEST(CanonicalPathTest, ShortestForSkipListsAndLinear) {
  for (const Scheme& scheme : {kBase2, kBase3, Scheme::Linear()}) {
    for (Position t = 2; t <= 256; ++t) {
      for (Position s = 1; s < t; s += (t > 64 ? 7 : 1)) {
        const Path p = CanonicalPath(scheme, V(t, 0), V(s, 0));
        ASSERT_TRUE(IsValidPath(p));
        ASSERT_EQ(p.front(), V(t, 0));
        ASSERT_EQ(p.back(), V(s, 0));
        ASSERT_EQ(p.edge_count(), BfsPath(scheme, V(t, 0), V(s, 0))->edge_count())
            << scheme.ToString() << " " << s << " " << t;
      }
    }
  }
}

TEST(CanonicalPathTest, LengthCap) {
  EXPECT_EQ(CanonicalPath(Scheme::Linear(), V(10, 0), V(1, 0), 10).vertices.size(),
            10u);
  try {
    CanonicalPath(Scheme::Linear(), V(10, 0), V(1, 0), 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
  EXPECT_THROW(CanonicalPath(Scheme::AntimonotoneBinary(), V(100, 0), V(1, 0), 3),
               Error);
}

// The antimonotone walk takes f2 whenever it does not pass the destination.
// That is a valid path but not always a shortest one.
TEST(CanonicalPathTest, AntimonotoneGreedyWalk) {
  const Scheme scheme = Scheme::AntimonotoneBinary();
  EXPECT_EQ(CanonicalPath(scheme, V(11, 0), V(3, 0)).edge_count(), 5u);
  EXPECT_EQ(BfsPath(scheme, V(11, 0), V(3, 0))->edge_count(), 4u);
  for (Position t = 2; t <= 256; ++t) {
    for (Position s = 1; s < t; ++s) {
      const Path p = CanonicalPath(scheme, V(t, 0), V(s, 0));
      ASSERT_TRUE(IsValidPath(p));
      ASSERT_EQ(p.back(), V(s, 0));
    }
  }
}

TEST(BfsDistancesTest, MatchesGreedyLengths) {
  const auto dist = BfsDistances(kBase2, V(100, 0), 1);
  for (Position s = 1; s < 100; ++s) {
    EXPECT_EQ(dist.at(V(s, 0)), GreedyPath(kBase2, V(100, 0), V(s, 0)).edge_count());
  }
  EXPECT_FALSE(dist.contains(S(50)));
}

TEST(OffPathOutNeighborsTest, Examples) {
  const Path p = GreedyPath(kBase2, V(13, 0), V(6, 0));
  EXPECT_EQ(OffPathOutNeighbors(p, true),
            (std::vector<Vertex>{S(13), V(12, 1), V(4, 2), V(8, 0)}));
  EXPECT_EQ(OffPathOutNeighbors(p, false),
            (std::vector<Vertex>{S(13), V(12, 1), V(4, 2), V(8, 0), S(6),
                                 V(5, 0)}));
  EXPECT_EQ(OffPathOutNeighbors(Path{kBase2, {V(5, 0)}}, false),
            (std::vector<Vertex>{S(5), V(4, 2)}));
  EXPECT_TRUE(OffPathOutNeighbors(Path{kBase2, {V(1, 0)}}, true).empty());
}

// Every JUMP edge leaving a base-2 canonical path lands on it again when
// its target is not below the destination.
TEST(OffPathOutNeighborsTest, JumpsStayInPath) {
  for (Position t = 2; t <= 512; ++t) {
    for (Position s = 1; s < t; ++s) {
      const Path p = GreedyPath(kBase2, V(t, 0), V(s, 0));
      for (const Vertex& v : p.vertices) {
        const Neighbors out = OutNeighbors(kBase2, v);
        if (out.size() < 2) continue;
        const Vertex& jump = out[1];
        if (jump.position >= s) {
          ASSERT_TRUE(p.Contains(jump)) << s << " " << t << " " << v.ToString();
        }
      }
    }
  }
}

}  // namespace
}  // namespace slls
