// island_census: census, identity verification and generators from the
// command line. Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "islands/dim3.hpp"
#include "islands/error.hpp"
#include "islands/generators.hpp"
#include "islands/identities.hpp"
#include "islands/io.hpp"
#include "islands/tuples.hpp"
#include "islands/verify.hpp"

namespace {

using namespace islands;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

CensusTable full_census(const PointSet& s, int oracle_cap) {
  return s.dim() == 2 ? census(s) : census3(s, oracle_cap);
}

struct Batch {
  std::string label;
  PointSet points;
  VerifyOptions opts;
  bool planar;
};

int run_verify(const std::string& file, const std::string& gen, const std::string& suite, VerifyOptions opts) {
  if (file.empty() == gen.empty()) throw Error(ErrorCode::BadParam, "give exactly one of FILE or --gen");
  const bool want_planar = suite == "planar" || suite == "all";
  const bool want_d3 = suite == "d3" || suite == "all";
  std::vector<Batch> batches;
  if (!file.empty()) {
    const PointFile pf = read_point_file(file);
    const bool planar = pf.points.dim() == 2;
    if ((planar && !want_planar) || (!planar && !want_d3)) {
      throw Error(ErrorCode::BadDimension, "suite '" + suite + "' does not apply to a " +
                                               std::to_string(pf.points.dim()) + "D file");
    }
    VerifyOptions o = opts;
    o.chain_e = pf.e;
    o.chain_f = pf.f;
    batches.push_back({file, pf.points, o, planar});
  } else {
    const GenSpec spec = parse_gen_spec(gen);
    VerifyOptions o = opts;
    o.horton = spec.kind == "horton";
    if (spec.kind == "random") o.source_seed = spec.seed;
    // Without an explicit dim, random and convex sets are drawn once per suite.
    const bool per_suite = spec.dim == 0 && (spec.kind == "random" || spec.kind == "convex");
    std::vector<int> dims;
    if (!per_suite) dims.push_back(2);
    if (per_suite && want_planar) dims.push_back(2);
    if (per_suite && want_d3) dims.push_back(3);
    for (int d : dims) {
      const Generated g = generate(spec, d);
      const bool planar = g.points.dim() == 2;
      if ((planar && !want_planar) || (!planar && !want_d3)) continue;
      VerifyOptions od = o;
      if (g.has_chain_edges) {
        od.chain_e = g.e;
        od.chain_f = g.f;
      }
      batches.push_back({per_suite ? gen + " dim=" + std::to_string(d) : gen, g.points, od, planar});
    }
    if (batches.empty()) throw Error(ErrorCode::BadDimension, "suite '" + suite + "' does not apply to '" + gen + "'");
  }
  std::size_t total = 0, failed = 0;
  for (const Batch& b : batches) {
    std::cout << "# " << (b.planar ? "planar" : "d3") << " suite on " << b.label << ": n=" << b.points.size()
              << " h=" << b.points.h() << " trials=" << b.opts.trials << " seed=" << b.opts.seed << '\n';
    const auto reports = b.planar ? verify_planar(b.points, b.opts) : verify_d3(b.points, b.opts);
    for (const VerificationReport& r : reports) {
      std::cout << format_report(r) << '\n';
      ++total;
      if (!r.pass) ++failed;
    }
  }
  std::cout << total << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitFail;
}

int run_gen(const std::string& text, const std::string& out) {
  const Generated g = generate(parse_gen_spec(text));
  const std::string body = format_point_file(g);
  if (out.empty() || out == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + out + "'");
  f << body;
  return 0;
}

int run_tr(const std::string& file, int r) {
  const PointSet s = read_point_file(file).points;
  if (s.dim() != 2) throw Error(ErrorCode::BadDimension, "tr needs a planar set");
  if (r < 2) throw Error(ErrorCode::BadR, "r must be >= 2");
  const BigInt t = BigInt(count_tuples(s, r));
  const BigInt m = moment(census(s), r);
  const bool ok = m == -t;
  const std::string rs = std::to_string(r);
  std::cout << "T_" << rs << " = " << to_string(t) << "; M_" << rs << " = " << to_string(m) << "; M_" << rs
            << " = -T_" << rs << (ok ? " OK" : " FAILED") << '\n';
  return ok ? 0 : kExitFail;
}

int run_poly(const std::string& file, const std::string& x_text, int oracle_cap) {
  const PointSet s = read_point_file(file).points;
  const Rational x = parse_rational(x_text);
  const Rational value = poly_sum(full_census(s, oracle_cap), x);
  const WeightParams p{0, x};
  const int n = s.size();
  const Rational expected =
      s.dim() == 2 ? expected_closed_form("poly", n, p) : expected_closed_form_d("poly", n, s.dim(), p);
  const bool ok = value == expected;
  std::cout << "P(" << to_string(x) << ") = " << to_string(value) << "; closed form " << to_string(expected)
            << (ok ? " OK" : " FAILED") << '\n';
  return ok ? 0 : kExitFail;
}

int run_rank(int n, const std::vector<std::string>& x_texts) {
  std::vector<Rational> xs;
  for (const std::string& t : x_texts) xs.push_back(parse_rational(t));
  if (xs.empty()) {
    for (int i = 1; i <= n - 2; ++i) xs.push_back(i);
  }
  const int rank = vandermonde_rank(n, xs);
  const bool ok = rank == n - 2;
  std::cout << "rank = " << rank << (ok ? " = " : " != ") << "n-2\n";
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of convex polygons with interior points, and the identities they satisfy"};
  app.require_subcommand(1);

  std::string file, format = "json", gen, suite = "planar", spec, out, x_text;
  VerifyOptions vopts;
  int r = 2, n = 0, oracle_cap = kDefaultOracleCap;
  std::vector<std::string> xs;

  auto* c_census = app.add_subcommand("census", "Print the X(k,l) table with derived sums");
  c_census->add_option("file", file, "point file")->required();
  c_census->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  c_census->add_option("--oracle-cap", oracle_cap, "largest 3D set to census");

  auto* c_verify = app.add_subcommand("verify", "Run an identity battery");
  c_verify->add_option("file", file, "point file");
  c_verify->add_option("--gen", gen, "generator spec, e.g. random:n=9,seed=7");
  c_verify->add_option("--suite", suite, "planar, d3 or all")->check(CLI::IsMember({"planar", "d3", "all"}));
  c_verify->add_option("--oracle-cap", vopts.oracle_cap, "largest n for brute-force work");
  c_verify->add_option("--trials", vopts.trials, "random sets compared for invariance");
  c_verify->add_option("--seed", vopts.seed, "seed of the first comparison set");

  auto* c_gen = app.add_subcommand("gen", "Write a generated point file");
  c_gen->add_option("spec", spec, "convex:n=6, random:n=10,seed=1, chain:n=7, horton:n=16, fixture:name=...")
      ->required();
  c_gen->add_option("--out", out, "output path (default stdout)");

  auto* c_tr = app.add_subcommand("tr", "Count empty edge tuples and compare with the moment");
  c_tr->add_option("file", file, "planar point file")->required();
  c_tr->add_option("--r", r, "tuple size");

  auto* c_poly = app.add_subcommand("poly", "Evaluate the polynomial sum at x");
  c_poly->add_option("file", file, "point file")->required();
  c_poly->add_option("--x", x_text, "rational p/q")->required();
  c_poly->add_option("--oracle-cap", oracle_cap, "largest 3D set to census");

  auto* c_rank = app.add_subcommand("rank", "Rank of the polynomial-sum system");
  c_rank->add_option("--n", n, "number of points")->required();
  c_rank->add_option("--x", xs, "distinct nonzero rationals (default 1..n-2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (c_census->parsed()) {
      const PointSet s = read_point_file(file).points;
      const CensusTable t = full_census(s, oracle_cap);
      std::cout << (format == "csv" ? census_csv(t) : census_json(t));
      return 0;
    }
    if (c_verify->parsed()) return run_verify(file, gen, suite, vopts);
    if (c_gen->parsed()) return run_gen(spec, out);
    if (c_tr->parsed()) return run_tr(file, r);
    if (c_poly->parsed()) return run_poly(file, x_text, oracle_cap);
    if (c_rank->parsed()) return run_rank(n, xs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
