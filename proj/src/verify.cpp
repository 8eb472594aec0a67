#include "islands/verify.hpp"

#include <algorithm>
#include <string>

#include "islands/dim3.hpp"
#include "islands/error.hpp"
#include "islands/generators.hpp"
#include "islands/identities.hpp"
#include "islands/tuples.hpp"

namespace islands {

namespace {

// Report for a check applied to many items, e.g. every directed edge.
VerificationReport tally(std::string id, long long total, long long ok, const ReportContext& ctx) {
  return {std::move(id), std::to_string(total) + " of " + std::to_string(total),
          std::to_string(ok) + " of " + std::to_string(total), ok == total, ctx};
}

std::string describe(const CensusTable& t) {
  std::string out;
  for (const auto& [key, count] : t.counts) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(key.k) + "," + std::to_string(key.l) + "):" + std::to_string(count);
  }
  return out.empty() ? "{}" : out;
}

Rational closed_form(const NamedWeight& w, int n, int d) {
  return d == 2 ? expected_closed_form(w.name, n, w.params) : expected_closed_form_d(w.name, n, d, w.params);
}

void weight_reports(std::vector<VerificationReport>& out, const PointSet& s, const CensusTable& table,
                    const VerifyOptions& opts, const ReportContext& ctx) {
  const int n = s.size();
  const int d = s.dim();
  const std::vector<NamedWeight> instances = catalogue_instances(n, d);
  std::vector<Rational> values;
  for (const NamedWeight& w : instances) {
    values.push_back(weighted_sum(table, catalogue_weight(w.name, w.params)));
    out.push_back(make_equality("weight." + w.label, closed_form(w, n, d), values.back(), ctx));
  }
  if (opts.trials <= 0) return;
  std::vector<long long> agree(instances.size(), 0);
  for (int i = 0; i < opts.trials; ++i) {
    const PointSet other = gen_random(n, opts.seed + static_cast<std::uint64_t>(i), 0, d);
    const CensusTable other_table = d == 2 ? census(other) : census3(other, std::max(opts.oracle_cap, n));
    for (std::size_t j = 0; j < instances.size(); ++j) {
      if (weighted_sum(other_table, catalogue_weight(instances[j].name, instances[j].params)) == values[j]) ++agree[j];
    }
  }
  for (std::size_t j = 0; j < instances.size(); ++j) {
    out.push_back(tally("invariance." + instances[j].label, opts.trials, agree[j], ctx));
  }
}

void mixed_reports(std::vector<VerificationReport>& out, const CensusTable& table, int n, int d,
                   const ReportContext& ctx) {
  for (int r = 0; r <= 2; ++r) {
    out.push_back(make_equality("mixed.r=" + std::to_string(r), expected_mixed_moment(n, d, r),
                                mixed_moment_sum(table, r), ctx));
  }
}

}  // namespace

std::vector<NamedWeight> catalogue_instances(int n, int d) {
  std::vector<NamedWeight> out;
  for (const std::string& name : catalogue_names()) {
    if (name == "binomial") {
      for (int m = d + 1; m <= n; ++m) out.push_back({"binomial.m=" + std::to_string(m), name, {m, 0}});
    } else if (name == "poly") {
      for (const char* x : {"-2", "-1", "1/2", "1", "2"}) {
        out.push_back({std::string("poly.x=") + x, name, {0, parse_rational(x)}});
      }
    } else {
      out.push_back({name, name, {}});
    }
  }
  return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

std::vector<VerificationReport> verify_planar(const PointSet& s, const VerifyOptions& opts) {
  if (s.dim() != 2) throw Error(ErrorCode::BadDimension, "planar battery needs a 2D point set");
  const int n = s.size();
  const int h = s.h();
  const ReportContext ctx{n, h, opts.source_seed};
  std::vector<VerificationReport> out;
  const CensusTable table = census(s);

  if (n <= opts.oracle_cap) {
    const CensusTable brute = census_brute(s, opts.oracle_cap);
    out.push_back({"census.oracle", describe(brute), describe(table), brute == table, ctx});
  }
  out.push_back(make_equality("alt_sum.l=0", binomial(n, 2) - n + 1, alt_sum(table, 0), ctx));
  out.push_back(make_equality("moment.r=1", expected_moment(n, h, 2, 1), moment(table, 1), ctx));
  out.push_back(make_equality("alt_sum.l=1", BigInt(n - h), alt_sum(table, 1), ctx));

  for (int p = 0; p < n; ++p) {
    BigInt sum = 0;
    for (const auto& [k, count] : census_containing_point(s, p)) sum += sign_power(k + 1) * BigInt(count);
    out.push_back(make_equality("point.a1.p=" + std::to_string(p), BigInt(s.is_extreme(p) ? 0 : 1), sum, ctx));
  }

  long long edges = 0, empty_ok = 0, bound_ok = 0, point_edge_total = 0, point_edge_ok = 0;
  // The lower bound needs a fourth point; a triangle alone has A_1 = 0.
  const BigInt lower = n >= 4 ? std::max(h, 4) - n : 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const DirectedEdge e{a, b};
      ++edges;
      const auto counts = edge_census(s, e);
      if (alt_sum(counts, 0) == (has_point_left(s, e) ? 1 : 0)) ++empty_ok;
      const BigInt a1 = alt_sum(counts, 1);
      if (a1 >= lower && a1 <= 1) ++bound_ok;
      for (int p = 0; p < n; ++p) {
        if (p == a || p == b) continue;
        ++point_edge_total;
        const int v = a1_point_edge(s, p, e);
        if (v >= -1 && v <= 1) ++point_edge_ok;
      }
    }
  }
  out.push_back(tally("edge.alt_sum.l=0", edges, empty_ok, ctx));
  out.push_back(tally("edge.a1.bounds", edges, bound_ok, ctx));
  out.push_back(tally("edge.point.a1", point_edge_total, point_edge_ok, ctx));
  if (opts.chain_e) {
    out.push_back(make_equality("chain.a1.e", BigInt(4 - n), alt_sum(edge_census(s, *opts.chain_e), 1), ctx));
  }
  if (opts.chain_f) {
    out.push_back(make_equality("chain.a1.f", BigInt(1), alt_sum(edge_census(s, *opts.chain_f), 1), ctx));
  }

  for (int t = 3; t <= n; ++t) {
    for (VerificationReport& r : check_inequalities(s, t)) {
      r.context = ctx;
      out.push_back(std::move(r));
    }
  }

  weight_reports(out, s, table, opts, ctx);
  mixed_reports(out, table, n, 2, ctx);

  for (int r : {2, 3}) {
    VerificationReport rep = verify_tuple_moment(s, r);
    rep.context = ctx;
    out.push_back(std::move(rep));
  }

  std::vector<Rational> xs;
  for (int i = 1; i <= n - 2; ++i) xs.push_back(i);
  out.push_back(make_equality("rank.vandermonde", Rational(n - 2), Rational(vandermonde_rank(n, xs)), ctx));
  for (const std::string name : {"pow2", "fib"}) {
    const WeightSpec w = catalogue_weight(name);
    const std::vector<Rational> c = decompose_weight(w, n, xs);
    Rational combined = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) combined += c[j] * poly_sum(table, xs[j]);
    out.push_back(make_equality("decompose." + name, weighted_sum(table, w), combined, ctx));
  }

  if (opts.horton) {
    Count big = 0;
    for (const auto& [key, count] : table.counts) {
      if (key.l == 0 && key.k >= 7) big += count;
    }
    out.push_back(make_equality("empty_7gon.none", BigInt(0), BigInt(big), ctx));
  }
  return out;
}

std::vector<VerificationReport> verify_d3(const PointSet& s, const VerifyOptions& opts) {
  if (s.dim() != 3) throw Error(ErrorCode::BadDimension, "d3 battery needs a 3D point set");
  const int n = s.size();
  const int h = s.h();
  const ReportContext ctx{n, h, opts.source_seed};
  std::vector<VerificationReport> out;
  const CensusTable table = census3(s, opts.oracle_cap);

  out.push_back(make_equality("alt_sum.l=1", BigInt(n - h), alt_sum3(table, 1), ctx));
  for (int r = 0; r <= 1; ++r) {
    out.push_back(make_equality("moment.r=" + std::to_string(r), expected_moment(n, h, 3, r), moment3(table, r), ctx));
  }
  weight_reports(out, s, table, opts, ctx);
  mixed_reports(out, table, n, 3, ctx);

  long long facets = 0, facet_ok = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (const OrientedFacet f : {OrientedFacet{a, b, c}, OrientedFacet{a, c, b}}) {
          ++facets;
          if (facet_alt_sum(s, f, opts.oracle_cap) == (has_point_positive(s, f) ? 1 : 0)) ++facet_ok;
        }
      }
    }
  }
  out.push_back(tally("facet.alt_sum.l=0", facets, facet_ok, ctx));
  return out;
}

}  // namespace islands
