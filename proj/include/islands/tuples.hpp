#pragma once

// Counting r-tuples of vertex-disjoint edges in convex position whose
// half-plane region contains no point of the set. Serves as the independent
// side of the identity M_r(S) = -T_r(S).

#include <span>

#include "islands/census.hpp"
#include "islands/report.hpp"

namespace islands {

struct UndirectedEdge {
  int u = 0;
  int v = 0;
};

/// Vertex-disjoint, endpoints in convex position, and every edge is an edge
/// of the convex hull of the 2r endpoints.
bool is_valid_tuple(const PointSet& s, std::span<const UndirectedEdge> edges);

/// Whether the intersection of the closed half-planes (each bounded by an
/// edge's line, on the side of the other edges) has no point of the set in
/// its interior. Requires is_valid_tuple.
bool tau_empty(const PointSet& s, std::span<const UndirectedEdge> edges);

/// Number of unordered valid tuples of r edges with an empty region.
Count count_tuples(const PointSet& s, int r);

/// Checks moment(census(S), r) == -count_tuples(S, r).
VerificationReport verify_tuple_moment(const PointSet& s, int r);

}  // namespace islands
