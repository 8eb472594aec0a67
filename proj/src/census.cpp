#include "islands/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "islands/error.hpp"

namespace islands {

Count CensusTable::at(int k, int l) const {
  auto it = counts.find({k, l});
  return it == counts.end() ? 0 : it->second;
}

void CensusTable::add(int k, int l, Count c) {
  if (c != 0) counts[{k, l}] += c;
}

void TriangleTable::set(int a, int b, int c, int v) {
  data_[index(a, b, c)] = v;
  data_[index(a, c, b)] = v;
  data_[index(b, a, c)] = v;
  data_[index(b, c, a)] = v;
  data_[index(c, a, b)] = v;
  data_[index(c, b, a)] = v;
}

namespace {

void require_planar(const PointSet& s, const char* what) {
  if (s.dim() != 2) {
    throw Error(ErrorCode::BadDimension, std::string(what) + " requires a planar point set");
  }
}

void require_index(const PointSet& s, int i) {
  if (i < 0 || i >= s.size()) {
    throw Error(ErrorCode::InvalidIndex, "point index " + std::to_string(i) + " out of range", {i});
  }
}

void require_edge(const PointSet& s, DirectedEdge e) {
  require_index(s, e.p);
  require_index(s, e.q);
  if (e.p == e.q) throw Error(ErrorCode::InvalidIndex, "edge endpoints coincide", {e.p, e.q});
}

// Depth-first extension of convex chains around one anchor. The anchor is the
// lexicographically smallest vertex of every polygon it reports, so each
// polygon is reported from exactly one anchor.
template <class Visit>
class AnchorWalker {
 public:
  AnchorWalker(const PointSet& s, const TriangleTable& tri, Visit& visit)
      : s_(s), tri_(tri), visit_(visit) {}

  void run(int anchor) {
    anchor_ = anchor;
    const auto pts = s_.points2();
    cand_.clear();
    for (int j = 0; j < s_.size(); ++j) {
      if (pts[anchor] < pts[j]) cand_.push_back(j);
    }
    std::sort(cand_.begin(), cand_.end(),
              [&](int u, int v) { return s_.orient(anchor, u, v) == Sign::Positive; });
    chain_.assign(1, anchor);
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      chain_.push_back(cand_[i]);
      extend(i, 0);
      chain_.pop_back();
    }
  }

 private:
  void extend(std::size_t last_pos, int interior) {
    const int prev = chain_[chain_.size() - 2];
    const int last = chain_.back();
    for (std::size_t t = last_pos + 1; t < cand_.size(); ++t) {
      const int w = cand_[t];
      if (s_.orient(prev, last, w) != Sign::Positive) continue;
      if (s_.orient(last, w, anchor_) != Sign::Positive) continue;
      const int inside = interior + tri_.at(anchor_, last, w);
      chain_.push_back(w);
      visit_(PolygonRecord{std::span<const int>(chain_), inside});
      extend(t, inside);
      chain_.pop_back();
    }
  }

  const PointSet& s_;
  const TriangleTable& tri_;
  Visit& visit_;
  int anchor_ = 0;
  std::vector<int> cand_;
  std::vector<int> chain_;
};

bool strictly_inside_polygon(const PointSet& s, std::span<const int> poly, int q) {
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (s.orient(poly[i], poly[(i + 1) % k], q) != Sign::Positive) return false;
  }
  return true;
}

bool has_directed_edge(std::span<const int> poly, DirectedEdge e) {
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (poly[i] == e.p) return poly[(i + 1) % k] == e.q;
  }
  return false;
}

}  // namespace

TriangleTable triangle_table(const PointSet& s) {
  require_planar(s, "triangle_table");
  const int n = s.size();
  const auto pts = s.points2();
  TriangleTable t(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        int inside = 0;
        const std::array<Point2, 3> tri{pts[a], pts[b], pts[c]};
        for (int q = 0; q < n; ++q) {
          if (q != a && q != b && q != c && point_in_simplex_strict(tri, pts[q])) ++inside;
        }
        t.set(a, b, c, inside);
      }
    }
  }
  return t;
}

void enumerate_polygons(const PointSet& s, const std::function<void(const PolygonRecord&)>& visit) {
  require_planar(s, "enumerate_polygons");
  const TriangleTable tri = triangle_table(s);
  auto forward = [&](const PolygonRecord& r) { visit(r); };
  AnchorWalker walker(s, tri, forward);
  for (int a = 0; a < s.size(); ++a) walker.run(a);
}

int census_threads_from_env() {
  unsigned hw = std::thread::hardware_concurrency();
  int fallback = hw == 0 ? 1 : static_cast<int>(hw);
  const char* env = std::getenv("ISLAND_CENSUS_THREADS");
  if (env == nullptr) return fallback;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return fallback;
  return v == 0 ? fallback : static_cast<int>(std::min<long>(v, 256));
}

CensusTable census(const PointSet& s, int threads) {
  require_planar(s, "census");
  const int n = s.size();
  if (threads <= 0) threads = census_threads_from_env();
  threads = std::max(1, std::min(threads, n));

  const TriangleTable tri = triangle_table(s);
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<Count> total(stride * stride, 0);
  std::mutex merge_mutex;
  std::atomic<int> next_anchor{0};

  auto worker = [&] {
    std::vector<Count> local(stride * stride, 0);
    auto tally = [&](const PolygonRecord& r) { ++local[r.k() * stride + r.interior]; };
    AnchorWalker walker(s, tri, tally);
    for (int a = next_anchor++; a < n; a = next_anchor++) walker.run(a);
    std::lock_guard lock(merge_mutex);
    for (std::size_t i = 0; i < local.size(); ++i) total[i] += local[i];
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CensusTable table{n, s.h(), 2, {}};
  for (int k = 3; k <= n; ++k) {
    for (int l = 0; l + k <= n; ++l) table.add(k, l, total[k * stride + l]);
  }
  return table;
}

CensusTable census_brute(const PointSet& s, int oracle_cap) {
  const int n = s.size();
  const int d = s.dim();
  if (n > oracle_cap || n > 30) {
    throw Error(ErrorCode::OracleCapExceeded,
                "brute-force census limited to n <= " + std::to_string(oracle_cap) + ", got " +
                    std::to_string(n));
  }
  CensusTable table{n, s.h(), d, {}};
  std::vector<int> subset;
  std::vector<bool> in_subset(n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) < d + 1) continue;
    subset.clear();
    for (int i = 0; i < n; ++i) {
      in_subset[i] = (mask >> i) & 1u;
      if (in_subset[i]) subset.push_back(i);
    }
    int interior = 0;
    if (d == 2) {
      const std::vector<int> hull = convex_hull_2d(s.points2(), subset);
      if (hull.size() != subset.size()) continue;
      for (int q = 0; q < n; ++q) {
        if (!in_subset[q] && strictly_inside_polygon(s, hull, q)) ++interior;
      }
    } else {
      const auto pts = s.points3();
      const std::vector<HullFacet> facets = convex_hull_3d(pts, subset);
      std::vector<bool> on_hull(n, false);
      for (const HullFacet& f : facets) on_hull[f.a] = on_hull[f.b] = on_hull[f.c] = true;
      if (static_cast<std::size_t>(std::count(on_hull.begin(), on_hull.end(), true)) != subset.size()) {
        continue;
      }
      for (int q = 0; q < n; ++q) {
        if (in_subset[q]) continue;
        bool inside = true;
        for (const HullFacet& f : facets) {
          if (orient3d(pts[f.a], pts[f.b], pts[f.c], pts[q]) != Sign::Positive) {
            inside = false;
            break;
          }
        }
        if (inside) ++interior;
      }
    }
    table.add(static_cast<int>(subset.size()), interior, 1);
  }
  return table;
}

std::map<int, Count> census_containing_point(const PointSet& s, int p) {
  require_planar(s, "census_containing_point");
  require_index(s, p);
  std::map<int, Count> out;
  if (s.is_extreme(p)) return out;
  enumerate_polygons(s, [&](const PolygonRecord& r) {
    if (r.interior == 1 && strictly_inside_polygon(s, r.vertices, p)) ++out[r.k()];
  });
  return out;
}

std::map<KL, Count> edge_census(const PointSet& s, DirectedEdge e) {
  require_planar(s, "edge_census");
  require_edge(s, e);
  std::map<KL, Count> out;
  enumerate_polygons(s, [&](const PolygonRecord& r) {
    if (has_directed_edge(r.vertices, e)) ++out[{r.k(), r.interior}];
  });
  return out;
}

BigInt alt_sum(const CensusTable& table, int l) {
  BigInt sum = 0;
  for (const auto& [key, count] : table.counts) {
    if (key.l != l) continue;
    if (sign_power(key.k + table.dim + 1) > 0) sum += count;
    else sum -= count;
  }
  return sum;
}

BigInt alt_sum(const std::map<KL, Count>& counts, int l) {
  BigInt sum = 0;
  for (const auto& [key, count] : counts) {
    if (key.l != l) continue;
    if (sign_power(key.k + 1) > 0) sum += count;
    else sum -= count;
  }
  return sum;
}

int a1_point_edge(const PointSet& s, int p, DirectedEdge e) {
  require_planar(s, "a1_point_edge");
  require_edge(s, e);
  require_index(s, p);
  if (p == e.p || p == e.q) {
    throw Error(ErrorCode::InvalidIndex, "point is an endpoint of the edge", {p});
  }
  int sum = 0;
  enumerate_polygons(s, [&](const PolygonRecord& r) {
    if (r.interior == 1 && has_directed_edge(r.vertices, e) && strictly_inside_polygon(s, r.vertices, p)) {
      sum += sign_power(r.k() + 1);
    }
  });
  return sum;
}

bool has_point_left(const PointSet& s, DirectedEdge e) {
  require_planar(s, "has_point_left");
  require_edge(s, e);
  for (int q = 0; q < s.size(); ++q) {
    if (q != e.p && q != e.q && s.orient(e.p, e.q, q) == Sign::Positive) return true;
  }
  return false;
}

}  // namespace islands
