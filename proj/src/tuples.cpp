#include "islands/tuples.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "islands/error.hpp"
#include "islands/identities.hpp"

namespace islands {

namespace {

bool adjacent_on_cycle(const std::vector<int>& cycle, int a, int b) {
  const std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    const int x = cycle[i], y = cycle[(i + 1) % m];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

class TupleCounter {
 public:
  TupleCounter(const PointSet& s, int r) : s_(s), r_(r), used_(s.size(), false) {
    for (int i = 0; i < s.size(); ++i) {
      for (int j = i + 1; j < s.size(); ++j) edges_.push_back({i, j});
    }
  }

  Count run() {
    chosen_.clear();
    pick(0);
    return count_;
  }

 private:
  void pick(std::size_t from) {
    if (static_cast<int>(chosen_.size()) == r_) {
      if (is_valid_tuple(s_, chosen_) && tau_empty(s_, chosen_)) ++count_;
      return;
    }
    for (std::size_t i = from; i < edges_.size(); ++i) {
      const UndirectedEdge e = edges_[i];
      if (used_[e.u] || used_[e.v]) continue;
      used_[e.u] = used_[e.v] = true;
      chosen_.push_back(e);
      pick(i + 1);
      chosen_.pop_back();
      used_[e.u] = used_[e.v] = false;
    }
  }

  const PointSet& s_;
  int r_;
  std::vector<bool> used_;
  std::vector<UndirectedEdge> edges_;
  std::vector<UndirectedEdge> chosen_;
  Count count_ = 0;
};

}  // namespace

bool is_valid_tuple(const PointSet& s, std::span<const UndirectedEdge> edges) {
  if (s.dim() != 2) throw Error(ErrorCode::BadDimension, "edge tuples are planar");
  std::set<int> endpoints;
  for (const UndirectedEdge& e : edges) {
    for (int i : {e.u, e.v}) {
      if (i < 0 || i >= s.size()) throw Error(ErrorCode::InvalidIndex, "edge endpoint out of range", {i});
    }
    if (e.u == e.v || !endpoints.insert(e.u).second || !endpoints.insert(e.v).second) return false;
  }
  const std::vector<int> subset(endpoints.begin(), endpoints.end());
  const std::vector<int> hull = convex_hull_2d(s.points2(), subset);
  if (hull.size() != subset.size()) return false;
  return std::all_of(edges.begin(), edges.end(),
                     [&](const UndirectedEdge& e) { return adjacent_on_cycle(hull, e.u, e.v); });
}

bool tau_empty(const PointSet& s, std::span<const UndirectedEdge> edges) {
  if (edges.size() < 2) throw Error(ErrorCode::BadParam, "region needs at least two edges");
  // Orient every edge so that the other edges lie on its positive side.
  std::vector<std::pair<int, int>> directed;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const UndirectedEdge& e = edges[i];
    const UndirectedEdge& other = edges[(i + 1) % edges.size()];
    if (s.orient(e.u, e.v, other.u) == Sign::Positive) directed.emplace_back(e.u, e.v);
    else directed.emplace_back(e.v, e.u);
  }
  for (int q = 0; q < s.size(); ++q) {
    const bool inside = std::all_of(directed.begin(), directed.end(), [&](const auto& d) {
      return s.orient(d.first, d.second, q) == Sign::Positive;
    });
    if (inside) return false;
  }
  return true;
}

Count count_tuples(const PointSet& s, int r) {
  if (s.dim() != 2) throw Error(ErrorCode::BadDimension, "edge tuples are planar");
  if (r < 2) throw Error(ErrorCode::BadR, "tuples need r >= 2");
  if (2 * r > s.size()) return 0;
  return TupleCounter(s, r).run();
}

VerificationReport verify_tuple_moment(const PointSet& s, int r) {
  const CensusTable table = census(s);
  const BigInt expected = -BigInt(count_tuples(s, r));
  return make_equality("tuple_moment.r=" + std::to_string(r), expected, moment(table, r),
                       {s.size(), s.h(), std::nullopt});
}

}  // namespace islands
