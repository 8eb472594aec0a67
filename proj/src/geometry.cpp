#include "islands/geometry.hpp"

#include <algorithm>
#include <string>

#include "islands/error.hpp"

namespace islands {

namespace {

using i128 = __int128;

Sign sign_of(i128 v) {
  if (v > 0) return Sign::Positive;
  if (v < 0) return Sign::Negative;
  return Sign::Zero;
}

std::string join(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s;
}

void check_range(std::int64_t c, int index) {
  if (c > kMaxCoordinate || c < -kMaxCoordinate) {
    throw Error(ErrorCode::CoordinateOutOfRange,
                "coordinate of point " + std::to_string(index) + " exceeds 2^40 in magnitude",
                {index});
  }
}

template <class P>
void check_distinct(const std::vector<P>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  int best_i = -1, best_j = -1;
  for (int t = 0; t + 1 < n; ++t) {
    if (pts[order[t]] == pts[order[t + 1]]) {
      const int i = order[t], j = order[t + 1];
      if (best_i < 0 || i < best_i || (i == best_i && j < best_j)) {
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_i >= 0) {
    throw Error(ErrorCode::DuplicatePoint,
                "points " + std::to_string(best_i) + " and " + std::to_string(best_j) +
                    " coincide",
                {best_i, best_j});
  }
}

}  // namespace

Sign orient2d(const Point2& a, const Point2& b, const Point2& c) {
  const i128 bx = i128{b.x} - a.x, by = i128{b.y} - a.y;
  const i128 cx = i128{c.x} - a.x, cy = i128{c.y} - a.y;
  return sign_of(bx * cy - by * cx);
}

Sign orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const i128 bx = i128{b.x} - a.x, by = i128{b.y} - a.y, bz = i128{b.z} - a.z;
  const i128 cx = i128{c.x} - a.x, cy = i128{c.y} - a.y, cz = i128{c.z} - a.z;
  const i128 dx = i128{d.x} - a.x, dy = i128{d.y} - a.y, dz = i128{d.z} - a.z;
  return sign_of(bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx));
}

bool point_in_simplex_strict(const std::array<Point2, 3>& s, const Point2& q) {
  const Sign o = orient2d(s[0], s[1], s[2]);
  if (o == Sign::Zero) return false;
  return orient2d(q, s[1], s[2]) == o && orient2d(s[0], q, s[2]) == o &&
         orient2d(s[0], s[1], q) == o;
}

bool point_in_simplex_strict(const std::array<Point3, 4>& s, const Point3& q) {
  const Sign o = orient3d(s[0], s[1], s[2], s[3]);
  if (o == Sign::Zero) return false;
  return orient3d(q, s[1], s[2], s[3]) == o && orient3d(s[0], q, s[2], s[3]) == o &&
         orient3d(s[0], s[1], q, s[3]) == o && orient3d(s[0], s[1], s[2], q) == o;
}

std::vector<int> convex_hull_2d(std::span<const Point2> points, std::span<const int> subset) {
  std::vector<int> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return points[a] < points[b]; });
  if (idx.size() < 3) return idx;
  // Andrew's monotone chain; lower chain then upper chain gives ccw order.
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && orient2d(points[hull[k - 2]], points[hull[k - 1]], points[i]) != Sign::Positive) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
    while (k >= lower && orient2d(points[hull[k - 2]], points[hull[k - 1]], points[*it]) != Sign::Positive) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<HullFacet> convex_hull_3d(std::span<const Point3> points, std::span<const int> subset) {
  std::vector<HullFacet> facets;
  const std::size_t m = subset.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Point3& a = points[subset[i]];
        const Point3& b = points[subset[j]];
        const Point3& c = points[subset[k]];
        Sign side = Sign::Zero;
        bool facet = true;
        for (std::size_t t = 0; t < m && facet; ++t) {
          if (t == i || t == j || t == k) continue;
          const Sign s = orient3d(a, b, c, points[subset[t]]);
          if (side == Sign::Zero) side = s;
          else if (s != side) facet = false;
        }
        if (!facet || side == Sign::Zero) continue;
        if (side == Sign::Positive) facets.push_back({subset[i], subset[j], subset[k]});
        else facets.push_back({subset[i], subset[k], subset[j]});
      }
    }
  }
  return facets;
}

PointSet validate(std::vector<Point2> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 points in the plane, got " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    check_range(points[i].x, i);
    check_range(points[i].y, i);
  }
  check_distinct(points);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (orient2d(points[i], points[j], points[k]) == Sign::Zero) {
          std::vector<int> idx{i, j, k};
          throw Error(ErrorCode::DegeneratePosition, "collinear points {" + join(idx) + "}", idx);
        }
      }
    }
  }
  PointSet s;
  s.dim_ = 2;
  s.n_ = n;
  s.pts2_ = std::move(points);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  s.hull_ = convex_hull_2d(s.pts2_, all);
  s.extreme_.assign(n, false);
  for (int v : s.hull_) s.extreme_[v] = true;
  return s;
}

PointSet validate(std::vector<Point3> points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 points in space, got " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    check_range(points[i].x, i);
    check_range(points[i].y, i);
    check_range(points[i].z, i);
  }
  check_distinct(points);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          if (orient3d(points[i], points[j], points[k], points[l]) == Sign::Zero) {
            std::vector<int> idx{i, j, k, l};
            throw Error(ErrorCode::DegeneratePosition, "coplanar points {" + join(idx) + "}", idx);
          }
        }
      }
    }
  }
  PointSet s;
  s.dim_ = 3;
  s.n_ = n;
  s.pts3_ = std::move(points);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  s.extreme_.assign(n, false);
  for (const HullFacet& f : convex_hull_3d(s.pts3_, all)) {
    s.extreme_[f.a] = s.extreme_[f.b] = s.extreme_[f.c] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (s.extreme_[i]) s.hull_.push_back(i);
  }
  return s;
}

PointSet validate_rows(const std::vector<std::vector<std::int64_t>>& rows, int dim) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorCode::BadDimension, "dimension must be 2 or 3, got " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != dim) {
      throw Error(ErrorCode::BadDimension,
                  "point " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " coordinates, expected " + std::to_string(dim),
                  {static_cast<int>(i)});
    }
  }
  if (dim == 2) {
    std::vector<Point2> pts;
    for (const auto& r : rows) pts.push_back({r[0], r[1]});
    return validate(std::move(pts));
  }
  std::vector<Point3> pts;
  for (const auto& r : rows) pts.push_back({r[0], r[1], r[2]});
  return validate(std::move(pts));
}

}  // namespace islands
