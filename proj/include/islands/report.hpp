#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "islands/exact.hpp"

namespace islands {

struct ReportContext {
  int n = 0;
  int h = 0;
  std::optional<std::uint64_t> seed;
};

/// Outcome of one identity or inequality check. For equalities `expected`
/// and `computed` are exact values; for inequalities `expected` holds the
/// relation that was required (e.g. ">= 3").
struct VerificationReport {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  ReportContext context;
};

inline VerificationReport make_equality(std::string id, const Rational& expected,
                                        const Rational& computed, ReportContext ctx = {}) {
  return {std::move(id), to_string(expected), to_string(computed), expected == computed, ctx};
}

inline VerificationReport make_equality(std::string id, const BigInt& expected,
                                        const BigInt& computed, ReportContext ctx = {}) {
  return {std::move(id), to_string(expected), to_string(computed), expected == computed, ctx};
}

}  // namespace islands
