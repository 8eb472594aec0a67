#pragma once

// Reproducible point-set constructions. Every output passes validate().

#include <cstdint>
#include <string>
#include <vector>

#include "islands/census.hpp"

namespace islands {

/// d = 2: (i, i^2); d = 3: (i, i^2, i^3), for i = 1..n.
PointSet gen_convex(int n, int dim = 2);

/// Uniform integer points in [0, bbox)^d, rejection-sampled one point at a
/// time until general position holds. bbox <= 0 selects 4 n^2.
PointSet gen_random(int n, std::uint64_t seed, std::int64_t bbox = 0, int dim = 2);

/// A square with n - 4 interior points on a chain just below its top side,
/// bowing toward the bottom. `e` is the bottom side (A_1 = 4 - n); `f` is the
/// diagonal from the bottom-left corner to the top-right one (A_1 = 1).
struct ChainSet {
  PointSet points;
  DirectedEdge e;
  DirectedEdge f;
};

ChainSet gen_chain(int n);

/// Horton set of n = 2^j points (n >= 4), x = 0..n-1.
PointSet gen_horton(int n);

/// Small named sets used in examples and tests.
PointSet gen_fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

/// Parsed generator description, e.g. "random:n=9,seed=7" or
/// "convex:n=6,dim=3" or "fixture:name=tetra-interior".
struct GenSpec {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 1;
  std::int64_t bbox = 0;
  int dim = 0;  // 0 = kind default
  std::string fixture;
};

GenSpec parse_gen_spec(const std::string& text);

struct Generated {
  PointSet points;
  std::vector<std::string> notes;  // written as comments next to the points
  bool has_chain_edges = false;
  DirectedEdge e;
  DirectedEdge f;
};

/// `default_dim` applies when the GenSpec names no dimension.
Generated generate(const GenSpec& spec, int default_dim = 2);

}  // namespace islands
