#include <gtest/gtest.h>

#include "islands/error.hpp"
#include "islands/generators.hpp"
#include "islands/identities.hpp"
#include "islands/tuples.hpp"

using namespace islands;

namespace {

PointSet quad() { return validate(std::vector<Point2>{{0, 0}, {8, 0}, {6, 6}, {-2, 2}}); }

std::vector<UndirectedEdge> tuple(std::initializer_list<UndirectedEdge> e) { return e; }

}  // namespace

TEST(Tuples, Validity) {
  const PointSet s = quad();
  EXPECT_TRUE(is_valid_tuple(s, tuple({{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_valid_tuple(s, tuple({{1, 2}, {3, 0}})));
  EXPECT_FALSE(is_valid_tuple(s, tuple({{0, 2}, {1, 3}})));
  EXPECT_FALSE(is_valid_tuple(s, tuple({{0, 1}, {1, 2}})));
}

TEST(Tuples, TauRegion) {
  EXPECT_TRUE(tau_empty(quad(), tuple({{0, 1}, {2, 3}})));
  const PointSet with_centre = validate(std::vector<Point2>{{0, 0}, {8, 0}, {6, 6}, {-2, 2}, {3, 2}});
  EXPECT_FALSE(tau_empty(with_centre, tuple({{0, 1}, {2, 3}})));
  try {
    tau_empty(quad(), tuple({{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParam);
  }
}

TEST(Tuples, ConvexCounts) {
  EXPECT_EQ(count_tuples(gen_convex(4), 2), 2u);
  const PointSet c5 = gen_convex(5);
  EXPECT_EQ(BigInt(count_tuples(c5, 2)), -moment(census(c5), 2));
  EXPECT_EQ(count_tuples(c5, 3), 0u);
  try {
    count_tuples(c5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadR);
  }
}

TEST(Tuples, MomentIdentity) {
  const auto rep = verify_tuple_moment(gen_convex(4), 2);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.expected, "-2");
  EXPECT_EQ(rep.computed, "-2");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet s = gen_random(4 + static_cast<int>(seed % 7), seed);
    for (int r : {2, 3}) EXPECT_TRUE(verify_tuple_moment(s, r).pass) << "seed " << seed << " r " << r;
  }
}

TEST(Tuples, RegionIndependentOfEdgeOrientation) {
  const PointSet s = gen_random(9, 3);
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b)
      for (int c = 0; c < s.size(); ++c)
        for (int d = c + 1; d < s.size(); ++d) {
          if (c == a || c == b || d == a || d == b) continue;
          const auto fwd = tuple({{a, b}, {c, d}});
          if (!is_valid_tuple(s, fwd)) continue;
          EXPECT_EQ(tau_empty(s, fwd), tau_empty(s, tuple({{b, a}, {d, c}})));
          EXPECT_EQ(tau_empty(s, fwd), tau_empty(s, tuple({{c, d}, {a, b}})));
        }
}
