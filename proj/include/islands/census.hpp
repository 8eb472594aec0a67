#pragma once

// Census of convex polygons spanned by a planar point set, by vertex count k
// and number l of interior points, plus the per-point and per-edge variants.

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "islands/exact.hpp"
#include "islands/geometry.hpp"

namespace islands {

inline constexpr int kDefaultOracleCap = 12;

struct KL {
  int k = 0;
  int l = 0;
  auto operator<=>(const KL&) const = default;
};

/// Exact counts X(k, l). Only nonzero entries are stored.
struct CensusTable {
  int n = 0;
  int h = 0;
  int dim = 2;
  std::map<KL, Count> counts;

  Count at(int k, int l) const;
  void add(int k, int l, Count c);
  bool operator==(const CensusTable&) const = default;
};

/// One convex polygon as seen by an enumeration visitor. `vertices` is in
/// counterclockwise order starting at the lexicographically smallest vertex
/// and is only valid for the duration of the callback.
struct PolygonRecord {
  std::span<const int> vertices;
  int interior = 0;
  int k() const noexcept { return static_cast<int>(vertices.size()); }
};

/// Directed edge p -> q; its left side is where orient2d(p, q, .) > 0.
struct DirectedEdge {
  int p = 0;
  int q = 0;
};

/// Number of points strictly inside each triangle of the set.
class TriangleTable {
 public:
  TriangleTable() = default;
  explicit TriangleTable(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0) {}

  int size() const noexcept { return n_; }
  int at(int a, int b, int c) const { return data_[index(a, b, c)]; }
  void set(int a, int b, int c, int v);

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }
  int n_ = 0;
  std::vector<int> data_;
};

TriangleTable triangle_table(const PointSet& s);

/// Visits every convex polygon (k >= 3) exactly once.
void enumerate_polygons(const PointSet& s, const std::function<void(const PolygonRecord&)>& visit);

/// Worker count from ISLAND_CENSUS_THREADS (0 or unset means hardware
/// concurrency).
int census_threads_from_env();

/// Full census via anchored convex-chain enumeration. `threads` <= 0 uses
/// census_threads_from_env().
CensusTable census(const PointSet& s, int threads = 0);

/// Independent subset-by-subset oracle for d = 2 and d = 3.
CensusTable census_brute(const PointSet& s, int oracle_cap = kDefaultOracleCap);

/// k -> number of convex k-gons whose interior contains p and nothing else.
std::map<int, Count> census_containing_point(const PointSet& s, int p);

/// (k, l) -> number of convex k-gons with l interior points having e as a
/// boundary edge and lying in the closed left half-plane of e.
std::map<KL, Count> edge_census(const PointSet& s, DirectedEdge e);

/// Alternating sum over k of X(k, l) with sign (-1)^(k+d+1), which is
/// (-1)^(k+1) in the plane.
BigInt alt_sum(const CensusTable& table, int l);

/// Alternating sum sum_k (-1)^(k+1) counts[(k, l)] for a planar per-edge map.
BigInt alt_sum(const std::map<KL, Count>& counts, int l);

/// Alternating sum over k of the k-gons that contain exactly p, have e as an
/// edge and lie left of e. Always in {-1, 0, 1}.
int a1_point_edge(const PointSet& s, int p, DirectedEdge e);

/// Whether some point other than the endpoints lies strictly left of e.
bool has_point_left(const PointSet& s, DirectedEdge e);

}  // namespace islands
