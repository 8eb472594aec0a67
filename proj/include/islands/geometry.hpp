#pragma once

// Exact orientation predicates, convex hulls and validated point sets.
//
// Coordinates are 64-bit integers restricted to |c| <= kMaxCoordinate so that
// every determinant below fits in a signed 128-bit integer. No floating point
// is used anywhere.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace islands {

inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 40;

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point2&) const = default;
};

struct Point3 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  auto operator<=>(const Point3&) const = default;
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

/// Sign of (b-a) x (c-a). Positive means a, b, c turn counterclockwise.
Sign orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Sign of det[b-a; c-a; d-a].
Sign orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// True iff q lies strictly inside the triangle (either orientation).
bool point_in_simplex_strict(const std::array<Point2, 3>& simplex, const Point2& q);

/// True iff q lies strictly inside the tetrahedron (either orientation).
bool point_in_simplex_strict(const std::array<Point3, 4>& simplex, const Point3& q);

/// Convex hull of `points[subset]`, counterclockwise, starting at the
/// lexicographically smallest point. Assumes no three points are collinear.
std::vector<int> convex_hull_2d(std::span<const Point2> points, std::span<const int> subset);

/// A triangle of point indices whose positive side (orient3d(a,b,c,.) > 0)
/// is the side the polytope lies on.
struct HullFacet {
  int a = 0;
  int b = 0;
  int c = 0;
};

/// Facets of the convex hull of `points[subset]` (at least four points, no
/// four coplanar), each oriented inward.
std::vector<HullFacet> convex_hull_3d(std::span<const Point3> points, std::span<const int> subset);

/// An immutable set of integer points in general position, d = 2 or 3.
/// Only constructible through validate().
class PointSet {
 public:
  int dim() const noexcept { return dim_; }
  int size() const noexcept { return n_; }
  int h() const noexcept { return static_cast<int>(hull_.size()); }

  /// d = 2: hull in counterclockwise order from the lexicographically
  /// smallest point. d = 3: extreme point indices in increasing order.
  const std::vector<int>& hull_vertices() const noexcept { return hull_; }
  bool is_extreme(int i) const { return extreme_.at(static_cast<std::size_t>(i)); }

  std::span<const Point2> points2() const noexcept { return pts2_; }
  std::span<const Point3> points3() const noexcept { return pts3_; }

  Sign orient(int a, int b, int c) const { return orient2d(pts2_[a], pts2_[b], pts2_[c]); }
  Sign orient(int a, int b, int c, int d) const {
    return orient3d(pts3_[a], pts3_[b], pts3_[c], pts3_[d]);
  }

  bool operator==(const PointSet& other) const = default;

 private:
  friend PointSet validate(std::vector<Point2> points);
  friend PointSet validate(std::vector<Point3> points);

  int dim_ = 2;
  int n_ = 0;
  std::vector<Point2> pts2_;
  std::vector<Point3> pts3_;
  std::vector<int> hull_;
  std::vector<bool> extreme_;
};

/// Checks distinctness, coordinate range and general position, then computes
/// the hull. Throws Error with the offending indices (smallest in
/// lexicographic order) on failure.
PointSet validate(std::vector<Point2> points);
PointSet validate(std::vector<Point3> points);

/// Row-based entry point used by file readers: each row has `dim` entries.
PointSet validate_rows(const std::vector<std::vector<std::int64_t>>& rows, int dim);

}  // namespace islands
