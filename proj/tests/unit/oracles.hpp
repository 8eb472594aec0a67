#pragma once

// Slow, independent reference computations used only by the tests. They use
// nothing but the orientation predicates.

#include <cstdint>
#include <vector>

#include "islands/census.hpp"

namespace oracle {

using islands::Point2;
using islands::Point3;
using islands::Sign;

inline bool extreme_2d(const std::vector<Point2>& p, std::size_t i) {
  // In general position i is extreme iff some line through i and another
  // point has every remaining point strictly on one side.
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == i) continue;
    int left = 0, right = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
      if (q == i || q == j) continue;
      (islands::orient2d(p[i], p[j], p[q]) == Sign::Positive ? left : right)++;
    }
    if (left == 0 || right == 0) return true;
  }
  return false;
}

inline bool in_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& q) {
  return islands::point_in_simplex_strict({a, b, c}, q);
}

inline bool in_tetra(const Point3& a, const Point3& b, const Point3& c, const Point3& d, const Point3& q) {
  return islands::point_in_simplex_strict({a, b, c, d}, q);
}

// Strictly inside the hull of sub (a convex-position subset) iff inside one
// of its triangles.
inline bool inside_2d(const std::vector<Point2>& p, const std::vector<int>& sub, int q) {
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = a + 1; b < sub.size(); ++b)
      for (std::size_t c = b + 1; c < sub.size(); ++c)
        if (in_triangle(p[sub[a]], p[sub[b]], p[sub[c]], p[q])) return true;
  return false;
}

inline bool inside_3d(const std::vector<Point3>& p, const std::vector<int>& sub, int q) {
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = a + 1; b < sub.size(); ++b)
      for (std::size_t c = b + 1; c < sub.size(); ++c)
        for (std::size_t d = c + 1; d < sub.size(); ++d)
          if (in_tetra(p[sub[a]], p[sub[b]], p[sub[c]], p[sub[d]], p[q])) return true;
  return false;
}

// Census by the Caratheodory criterion: a subset is in convex position iff
// none of its points lies inside a simplex spanned by the others. Misses
// points on hull faces, which general position rules out.
template <typename P, typename Inside>
std::map<islands::KL, islands::Count> census(const std::vector<P>& p, int d, Inside inside) {
  const int n = static_cast<int>(p.size());
  std::map<islands::KL, islands::Count> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) sub.push_back(i);
    if (static_cast<int>(sub.size()) < d + 1) continue;
    bool convex = true;
    for (std::size_t i = 0; i < sub.size() && convex; ++i) {
      std::vector<int> rest;
      for (std::size_t j = 0; j < sub.size(); ++j)
        if (j != i) rest.push_back(sub[j]);
      convex = !inside(p, rest, sub[i]);
    }
    if (!convex) continue;
    int l = 0;
    for (int q = 0; q < n; ++q)
      if (!((mask >> q) & 1u) && inside(p, sub, q)) ++l;
    ++out[{static_cast<int>(sub.size()), l}];
  }
  return out;
}

inline std::map<islands::KL, islands::Count> census(const islands::PointSet& s) {
  if (s.dim() == 2) {
    const std::vector<Point2> p(s.points2().begin(), s.points2().end());
    return census(p, 2, inside_2d);
  }
  const std::vector<Point3> p(s.points3().begin(), s.points3().end());
  return census(p, 3, inside_3d);
}

}  // namespace oracle
