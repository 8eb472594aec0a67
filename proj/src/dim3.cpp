#include "islands/dim3.hpp"

#include <bit>
#include <string>

#include "islands/error.hpp"

namespace islands {

namespace {

void require_spatial(const PointSet& s) {
  if (s.dim() != 3) throw Error(ErrorCode::BadDimension, "operation requires a 3D point set");
}

void require_facet(const PointSet& s, OrientedFacet f) {
  for (int i : {f.a, f.b, f.c}) {
    if (i < 0 || i >= s.size()) {
      throw Error(ErrorCode::InvalidIndex, "facet index " + std::to_string(i) + " out of range", {i});
    }
  }
  if (f.a == f.b || f.b == f.c || f.a == f.c) {
    throw Error(ErrorCode::InvalidIndex, "facet vertices must be distinct", {f.a, f.b, f.c});
  }
}

}  // namespace

CensusTable census3(const PointSet& s, int oracle_cap) {
  require_spatial(s);
  return census_brute(s, oracle_cap);
}

bool has_point_positive(const PointSet& s, OrientedFacet f) {
  require_spatial(s);
  require_facet(s, f);
  for (int q = 0; q < s.size(); ++q) {
    if (q != f.a && q != f.b && q != f.c && s.orient(f.a, f.b, f.c, q) == Sign::Positive) return true;
  }
  return false;
}

BigInt facet_alt_sum(const PointSet& s, OrientedFacet f, int oracle_cap) {
  require_spatial(s);
  require_facet(s, f);
  if (s.size() > oracle_cap) {
    throw Error(ErrorCode::OracleCapExceeded, "facet sums limited to n <= " + std::to_string(oracle_cap));
  }
  const auto pts = s.points3();
  std::vector<int> positive;
  for (int q = 0; q < s.size(); ++q) {
    if (q != f.a && q != f.b && q != f.c && s.orient(f.a, f.b, f.c, q) == Sign::Positive) positive.push_back(q);
  }
  // Any nonempty subset of the positive side, together with f, is a polytope
  // having f as a facet; keep those in convex position and empty.
  BigInt sum = 0;
  const std::uint32_t limit = std::uint32_t{1} << positive.size();
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    subset.assign({f.a, f.b, f.c});
    for (std::size_t i = 0; i < positive.size(); ++i) {
      if ((mask >> i) & 1u) subset.push_back(positive[i]);
    }
    const std::vector<HullFacet> facets = convex_hull_3d(pts, subset);
    std::vector<bool> on_hull(s.size(), false);
    for (const HullFacet& h : facets) on_hull[h.a] = on_hull[h.b] = on_hull[h.c] = true;
    bool convex = true;
    for (int v : subset) convex = convex && on_hull[v];
    if (!convex) continue;
    bool empty = true;
    for (int q = 0; q < s.size() && empty; ++q) {
      if (on_hull[q]) continue;
      bool inside = true;
      for (const HullFacet& h : facets) {
        if (orient3d(pts[h.a], pts[h.b], pts[h.c], pts[q]) != Sign::Positive) {
          inside = false;
          break;
        }
      }
      if (inside) empty = false;
    }
    if (!empty) continue;
    const int k = static_cast<int>(subset.size());
    sum += sign_power(k + 3 + 1);
  }
  return sum;
}

}  // namespace islands
