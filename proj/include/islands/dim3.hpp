#pragma once

// Three-dimensional census: convex k-vertex polytopes with l interior
// points, and the dimension-aware sums over them. Signs carry the extra
// (-1)^d factor, so every formula below reduces to the planar one at d = 2.

#include "islands/census.hpp"
#include "islands/identities.hpp"

namespace islands {

/// Triangle (a, b, c); its positive side is where orient3d(a, b, c, .) > 0.
struct OrientedFacet {
  int a = 0;
  int b = 0;
  int c = 0;
};

/// Brute-force census of a spatial set (n <= oracle_cap).
CensusTable census3(const PointSet& s, int oracle_cap = kDefaultOracleCap);

/// sum_k (-1)^(k+d+1) X(k, l).
inline BigInt alt_sum3(const CensusTable& table, int l) { return alt_sum(table, l); }

inline BigInt moment3(const CensusTable& table, int r) { return moment(table, r); }

inline Rational weighted_sum3(const CensusTable& table, const WeightSpec& w) { return weighted_sum(table, w); }

inline Rational expected_closed_form3(const std::string& name, int n, int d, const WeightParams& params = {}) {
  return expected_closed_form_d(name, n, d, params);
}

inline BigInt mixed_moment_sum3(const CensusTable& table, int r) { return mixed_moment_sum(table, r); }

/// Alternating sum over empty polytopes having f as a facet and lying on its
/// positive side. Equals 1 if some point is strictly on the positive side,
/// 0 otherwise.
BigInt facet_alt_sum(const PointSet& s, OrientedFacet f, int oracle_cap = kDefaultOracleCap);

bool has_point_positive(const PointSet& s, OrientedFacet f);

}  // namespace islands
