#pragma once

// Identity batteries run by `island_census verify` and the acceptance suite.

#include <cstdint>
#include <optional>
#include <vector>

#include "islands/census.hpp"
#include "islands/identities.hpp"
#include "islands/report.hpp"

namespace islands {

struct VerifyOptions {
  int oracle_cap = kDefaultOracleCap;
  int trials = 3;            // extra random sets of the same n for invariance checks
  std::uint64_t seed = 1;    // seed of the first extra set
  std::optional<std::uint64_t> source_seed;  // echoed in reports
  bool horton = false;       // also check that no empty 7-gon exists
  std::optional<DirectedEdge> chain_e;  // expect A_1(S; e) = 4 - n
  std::optional<DirectedEdge> chain_f;  // expect A_1(S; f) = 1
};

std::vector<VerificationReport> verify_planar(const PointSet& s, const VerifyOptions& opts = {});
std::vector<VerificationReport> verify_d3(const PointSet& s, const VerifyOptions& opts = {});

bool all_pass(const std::vector<VerificationReport>& reports);

/// Catalogue weights with every parameter value the batteries use.
struct NamedWeight {
  std::string label;
  std::string name;
  WeightParams params;
};
std::vector<NamedWeight> catalogue_instances(int n, int d);

}  // namespace islands
