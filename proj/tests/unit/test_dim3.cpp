#include <gtest/gtest.h>

#include <random>

#include "islands/dim3.hpp"
#include "islands/error.hpp"
#include "islands/generators.hpp"
#include "oracles.hpp"

using namespace islands;

namespace {

// Outer tetrahedron with `extra` random points inside.
PointSet stuffed_tetra(std::uint64_t seed, int extra) {
  std::vector<Point3> p = {{0, 0, 0}, {1000, 0, 0}, {0, 1000, 0}, {0, 0, 1000}};
  std::mt19937_64 rng(seed);
  while (static_cast<int>(p.size()) < 4 + extra) {
    p.push_back({static_cast<std::int64_t>(rng() % 300) + 1, static_cast<std::int64_t>(rng() % 300) + 1,
                 static_cast<std::int64_t>(rng() % 300) + 1});
    try {
      validate(p);
    } catch (const Error&) {
      p.pop_back();
    }
  }
  return validate(p);
}

std::vector<PointSet> samples() {
  std::vector<PointSet> out;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) out.push_back(gen_random(4 + static_cast<int>(seed % 6), seed, 0, 3));
  for (std::uint64_t seed = 1; seed <= 8; ++seed) out.push_back(stuffed_tetra(seed, 1 + static_cast<int>(seed % 6)));
  out.push_back(gen_fixture("tetra-interior"));
  return out;
}

}  // namespace

TEST(Census3, Examples) {
  EXPECT_EQ(census3(gen_fixture("tetra")).counts, (std::map<KL, Count>{{{4, 0}, 1}}));
  EXPECT_EQ(census3(gen_fixture("tetra-interior")).counts, (std::map<KL, Count>{{{4, 0}, 4}, {{4, 1}, 1}}));
  const CensusTable curve = census3(gen_convex(8, 3));
  for (int k = 4; k <= 8; ++k) EXPECT_EQ(BigInt(curve.at(k, 0)), binomial(8, k));
  for (const auto& [key, c] : curve.counts) EXPECT_EQ(key.l, 0);
}

TEST(Census3, MatchesSimplexOracle) {
  for (const PointSet& s : samples()) EXPECT_EQ(census3(s).counts, oracle::census(s)) << s.size();
}

TEST(Census3, RejectsPlanar) {
  try {
    census3(gen_convex(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadDimension);
  }
}

TEST(Dim3, Examples) {
  const CensusTable t = census3(gen_fixture("tetra-interior"));
  EXPECT_EQ(alt_sum3(t, 1), 1);
  EXPECT_EQ(weighted_sum3(t, weights::pow2()), 6);
  EXPECT_EQ(expected_closed_form3("pow2", 5, 3), 6);
  EXPECT_EQ(mixed_moment_sum3(t, 1), 15);
  EXPECT_EQ(expected_mixed_moment(5, 3, 1), 15);
  EXPECT_EQ(mixed_moment_sum3(census3(gen_fixture("tetra")), 0), 1);
  EXPECT_EQ(poly_sum(census3(gen_convex(6, 3)), 1), 22);
  EXPECT_EQ(expected_closed_form3("poly", 6, 3, {0, 1}), 22);
}

TEST(Dim3, Identities) {
  for (const PointSet& s : samples()) {
    const CensusTable t = census3(s);
    const int n = s.size(), h = s.h();
    EXPECT_EQ(alt_sum3(t, 1), n - h);
    EXPECT_EQ(moment3(t, 0), expected_moment(n, h, 3, 0));
    EXPECT_EQ(moment3(t, 1), expected_moment(n, h, 3, 1));
    for (int r = 0; r <= 2; ++r) EXPECT_EQ(mixed_moment_sum3(t, r), expected_mixed_moment(n, 3, r));
    BigInt m2 = 0;
    for (int k = 0; k <= 3; ++k) m2 += sign_power(3 + k) * BigInt(k * (k - 3) / 2) * binomial(n, k);
    EXPECT_EQ(expected_mixed_moment(n, 3, 2), m2);
    for (int m = 4; m <= n; ++m) EXPECT_EQ(weighted_sum3(t, weights::binomial(m)), binomial(n, m));
    for (const std::string& name : catalogue_names()) {
      if (name == "binomial") continue;
      const WeightParams p{0, Rational(1, 2)};
      EXPECT_EQ(weighted_sum3(t, catalogue_weight(name, p)), expected_closed_form3(name, n, 3, p)) << name;
    }
  }
}

TEST(Facet, Examples) {
  const PointSet tetra = gen_fixture("tetra");
  // (0,1,2) spans z = 0 with the apex above: orient3d > 0 for point 3.
  EXPECT_EQ(facet_alt_sum(tetra, {0, 1, 2}), 1);
  EXPECT_EQ(facet_alt_sum(tetra, {0, 2, 1}), 0);
  EXPECT_EQ(facet_alt_sum(gen_fixture("tetra-interior"), {0, 1, 2}), 1);
}

TEST(Facet, PositiveSideLaw) {
  for (const PointSet& s : samples()) {
    const int n = s.size();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (const OrientedFacet f : {OrientedFacet{a, b, c}, OrientedFacet{a, c, b}}) {
            EXPECT_EQ(facet_alt_sum(s, f), has_point_positive(s, f) ? 1 : 0);
          }
  }
}
