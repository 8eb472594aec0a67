#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "islands/error.hpp"
#include "islands/generators.hpp"
#include "oracles.hpp"

using namespace islands;

namespace {

PointSet triangle_interior() { return gen_fixture("triangle-interior"); }

std::map<KL, Count> as_map(const CensusTable& t) { return t.counts; }

}  // namespace

TEST(TriangleTable, Entries) {
  const PointSet s = triangle_interior();
  const TriangleTable t = triangle_table(s);
  EXPECT_EQ(t.at(0, 1, 2), 1);
  EXPECT_EQ(t.at(2, 0, 1), 1);
  EXPECT_EQ(t.at(0, 1, 3), 0);
  EXPECT_EQ(triangle_table(gen_convex(3)).at(0, 1, 2), 0);
}

TEST(Enumerate, ConvexFiveVisitsSixteen) {
  int visits = 0;
  enumerate_polygons(gen_convex(5), [&](const PolygonRecord& r) {
    ++visits;
    EXPECT_EQ(r.interior, 0);
  });
  EXPECT_EQ(visits, 16);
}

TEST(Enumerate, TriangleInterior) {
  int with_point = 0, empty = 0, larger = 0;
  enumerate_polygons(triangle_interior(), [&](const PolygonRecord& r) {
    if (r.k() > 3) ++larger;
    (r.interior == 1 ? with_point : empty)++;
  });
  EXPECT_EQ(with_point, 1);
  EXPECT_EQ(empty, 3);
  EXPECT_EQ(larger, 0);
}

TEST(Enumerate, VerticesCounterclockwiseFromSmallest) {
  const PointSet s = gen_random(9, 4);
  enumerate_polygons(s, [&](const PolygonRecord& r) {
    const auto v = r.vertices;
    EXPECT_EQ(*std::min_element(v.begin(), v.end(),
                                [&](int a, int b) { return s.points2()[a] < s.points2()[b]; }),
              v[0]);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_EQ(s.orient(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]), Sign::Positive);
    }
  });
}

TEST(Census, Examples) {
  const CensusTable c5 = census(gen_convex(5));
  EXPECT_EQ(as_map(c5), (std::map<KL, Count>{{{3, 0}, 10}, {{4, 0}, 5}, {{5, 0}, 1}}));
  const CensusTable t = census(triangle_interior());
  EXPECT_EQ(as_map(t), (std::map<KL, Count>{{{3, 0}, 3}, {{3, 1}, 1}}));
  EXPECT_EQ(as_map(census(gen_convex(3))), (std::map<KL, Count>{{{3, 0}, 1}}));
  EXPECT_EQ(as_map(census_brute(gen_convex(4))), (std::map<KL, Count>{{{3, 0}, 4}, {{4, 0}, 1}}));
  EXPECT_EQ(as_map(census_brute(gen_fixture("tetra"))), (std::map<KL, Count>{{{4, 0}, 1}}));
}

TEST(Census, MatchesBothOracles) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const PointSet s = gen_random(3 + static_cast<int>(seed % 10), seed);
    const CensusTable fast = census(s);
    EXPECT_EQ(fast, census_brute(s)) << "seed " << seed;
    EXPECT_EQ(fast.counts, oracle::census(s)) << "seed " << seed;
  }
}

TEST(Census, ConvexPositionIsBinomial) {
  for (int n = 3; n <= 14; ++n) {
    const CensusTable t = census(gen_convex(n));
    for (int k = 3; k <= n; ++k) EXPECT_EQ(BigInt(t.at(k, 0)), binomial(n, k));
    for (const auto& [key, c] : t.counts) EXPECT_EQ(key.l, 0);
  }
}

TEST(Census, ThreadCountDoesNotChangeResult) {
  const PointSet s = gen_random(14, 21);
  const CensusTable one = census(s, 1);
  for (int threads : {2, 3, 8}) EXPECT_EQ(census(s, threads), one);
  setenv("ISLAND_CENSUS_THREADS", "3", 1);
  EXPECT_EQ(census_threads_from_env(), 3);
  EXPECT_EQ(census(s), one);
  unsetenv("ISLAND_CENSUS_THREADS");
}

TEST(Census, PermutationInvariant) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet s = gen_random(11, seed);
    std::vector<Point2> p(s.points2().begin(), s.points2().end());
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(census(validate(p)).counts, census(s).counts);
  }
}

TEST(Census, BruteRespectsCap) {
  try {
    census_brute(gen_random(13, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleCapExceeded);
  }
  EXPECT_EQ(census_brute(gen_random(13, 1), 13), census(gen_random(13, 1)));
}

TEST(ContainingPoint, Examples) {
  const PointSet s = triangle_interior();
  EXPECT_EQ(census_containing_point(s, 3), (std::map<int, Count>{{3, 1}}));
  EXPECT_TRUE(census_containing_point(s, 0).empty());
}

TEST(ContainingPoint, AlternatingSumIsOneInside) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet s = gen_random(10, seed);
    for (int p = 0; p < s.size(); ++p) {
      BigInt sum = 0;
      for (const auto& [k, c] : census_containing_point(s, p)) sum += sign_power(k + 1) * BigInt(c);
      EXPECT_EQ(sum, s.is_extreme(p) ? 0 : 1);
    }
  }
}

TEST(EdgeCensus, ConvexQuad) {
  const PointSet s = validate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(edge_census(s, {0, 1}), (std::map<KL, Count>{{{3, 0}, 2}, {{4, 0}, 1}}));
  EXPECT_TRUE(edge_census(s, {1, 0}).empty());
  EXPECT_FALSE(has_point_left(s, {1, 0}));
}

TEST(EdgeCensus, EmptyColumnLaw) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const PointSet s = gen_random(8, seed);
    for (int a = 0; a < s.size(); ++a) {
      for (int b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        EXPECT_EQ(alt_sum(edge_census(s, {a, b}), 0), has_point_left(s, {a, b}) ? 1 : 0);
      }
    }
  }
}

TEST(AltSum, Examples) {
  EXPECT_EQ(alt_sum(census(gen_convex(5)), 0), 6);
  EXPECT_EQ(alt_sum(census(triangle_interior()), 1), 1);
  EXPECT_EQ(alt_sum(census(triangle_interior()), 2), 0);
}

TEST(PointEdge, Examples) {
  const PointSet sq = validate(std::vector<Point2>{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 1}});
  EXPECT_EQ(a1_point_edge(sq, 4, {0, 1}), 1);
  EXPECT_EQ(a1_point_edge(sq, 2, {0, 1}), 0);
  try {
    a1_point_edge(sq, 0, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidIndex);
  }
}

TEST(PointEdge, ValuesInUnitRange) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet s = gen_random(9, seed);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        for (int p = 0; p < s.size(); ++p) {
          if (a == b || p == a || p == b) continue;
          const int v = a1_point_edge(s, p, {a, b});
          EXPECT_TRUE(v >= -1 && v <= 1);
          if (s.is_extreme(p)) EXPECT_EQ(v, 0);
        }
  }
}

TEST(Census, RejectsSpatialSet) {
  try {
    census(gen_fixture("tetra"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadDimension);
  }
}
