#include "islands/identities.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "islands/error.hpp"

namespace islands {

namespace {

int mod6(long long m) { return static_cast<int>(((m % 6) + 6) % 6); }

Rational rat(const BigInt& v) { return Rational(v); }

const std::vector<std::string> kCatalogue{"pow2", "binomial", "fib", "fib_alt", "cheb_cos", "cheb_sin", "poly"};

void require_known(const std::string& name) {
  if (std::find(kCatalogue.begin(), kCatalogue.end(), name) == kCatalogue.end()) {
    throw Error(ErrorCode::UnknownIdentity, "no catalogue weight named '" + name + "'");
  }
}

// Full sum_{k=0}^{n} f(k, 0) C(n, k) for the named base row, in closed form.
Rational full_transform(const std::string& name, int n, const WeightParams& p) {
  if (name == "pow2") return rat(BigInt(1) << n);
  if (name == "binomial") return rat(binomial(n, p.m));
  if (name == "fib") return rat(fibonacci(2LL * n));
  if (name == "fib_alt") return rat(-fibonacci(n));
  if (name == "cheb_cos") return cos_third_turn(n);
  if (name == "cheb_sin") return sin_third_turn(n);
  return pow_int(1 + p.x, n);
}

// Polygon list for a planar set, captured once so that the per-edge and
// per-point truncations do not re-enumerate.
struct OwnedPolygon {
  std::vector<int> vertices;
  int interior;
};

std::vector<OwnedPolygon> collect(const PointSet& s) {
  std::vector<OwnedPolygon> out;
  enumerate_polygons(s, [&](const PolygonRecord& r) {
    out.push_back({std::vector<int>(r.vertices.begin(), r.vertices.end()), r.interior});
  });
  return out;
}

bool has_edge(const std::vector<int>& poly, int p, int q) {
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (poly[i] == p) return poly[(i + 1) % k] == q;
  }
  return false;
}

bool contains(const PointSet& s, const std::vector<int>& poly, int q) {
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (s.orient(poly[i], poly[(i + 1) % k], q) != Sign::Positive) return false;
  }
  return true;
}

// Checks a truncated alternating sum against its bound: >= for odd t,
// <= for even t, with equality exactly when the next count vanishes.
bool truncation_ok(const std::map<int, Count>& by_k, int t, const BigInt& bound) {
  BigInt partial = 0;
  for (int k = 3; k <= t; ++k) {
    auto it = by_k.find(k);
    if (it == by_k.end()) continue;
    if (sign_power(k + 1) > 0) partial += it->second;
    else partial -= it->second;
  }
  const bool next_zero = by_k.find(t + 1) == by_k.end() || by_k.at(t + 1) == 0;
  const bool relation = (t % 2 == 1) ? partial >= bound : partial <= bound;
  return relation && ((partial == bound) == next_zero);
}

void require_distinct_nonzero(std::span<const Rational> xs) {
  std::set<Rational> seen;
  for (const Rational& x : xs) {
    if (x == 0) throw Error(ErrorCode::BadParam, "evaluation points must be nonzero");
    if (!seen.insert(x).second) {
      throw Error(ErrorCode::RepeatedX, "evaluation point " + to_string(x) + " repeated");
    }
  }
}

}  // namespace

int cos_third_turn(long long m) {
  static constexpr int table[6] = {2, 1, -1, -2, -1, 1};
  return table[mod6(m)];
}

int sin_third_turn(long long m) {
  static constexpr int table[6] = {0, 1, 1, 0, -1, -1};
  return table[mod6(m)];
}

const Rational& BaseRow::at(int k) const {
  if (k < first_k || k > last_k()) {
    throw Error(ErrorCode::RangeExceeded, "base row has no value at k = " + std::to_string(k));
  }
  return values[static_cast<std::size_t>(k - first_k)];
}

Rational expand_base_row(const BaseRow& base, int k, int l) {
  return expand_base_row([&](int j) { return base.at(j); }, k, l);
}

Rational expand_base_row(const std::function<Rational(int)>& base, int k, int l) {
  Rational sum = 0;
  for (int i = 0; i <= l; ++i) sum += rat(binomial(l, i)) * base(k + i);
  return sum;
}

namespace weights {

WeightSpec pow2() {
  return {"pow2", WeightKind::Catalogue, [](int, int l) { return rat(BigInt(1) << l); }};
}

WeightSpec binomial(int m) {
  return {"binomial", WeightKind::Catalogue,
          [m](int k, int l) { return rat(islands::binomial(l, m - k)); }};
}

WeightSpec fib_up() {
  return {"fib", WeightKind::Catalogue, [](int k, int l) { return rat(fibonacci(k + 2LL * l)); }};
}

WeightSpec fib_alt() {
  return {"fib_alt", WeightKind::Catalogue,
          [](int k, int l) { return rat(sign_power(k + l) * fibonacci(static_cast<long long>(k) - l)); }};
}

WeightSpec cheb_cos() {
  return {"cheb_cos", WeightKind::Catalogue, [](int k, int l) { return Rational(cos_third_turn(2LL * k + l)); }};
}

WeightSpec cheb_sin() {
  return {"cheb_sin", WeightKind::Catalogue, [](int k, int l) { return Rational(sin_third_turn(2LL * k + l)); }};
}

WeightSpec poly(const Rational& x) {
  return {"poly", WeightKind::Catalogue, [x](int k, int l) { return pow_int(x, k) * pow_int(1 + x, l); }};
}

WeightSpec from_base_row(std::string name, BaseRow row) {
  return {std::move(name), WeightKind::UserBaseRow,
          [row = std::move(row)](int k, int l) { return expand_base_row(row, k, l); }};
}

WeightSpec custom(std::string name, std::function<Rational(int, int)> f) {
  return {std::move(name), WeightKind::Custom, std::move(f)};
}

}  // namespace weights

const std::vector<std::string>& catalogue_names() { return kCatalogue; }

WeightSpec catalogue_weight(const std::string& name, const WeightParams& params) {
  require_known(name);
  if (name == "pow2") return weights::pow2();
  if (name == "binomial") return weights::binomial(params.m);
  if (name == "fib") return weights::fib_up();
  if (name == "fib_alt") return weights::fib_alt();
  if (name == "cheb_cos") return weights::cheb_cos();
  if (name == "cheb_sin") return weights::cheb_sin();
  return weights::poly(params.x);
}

bool check_recurrence(const WeightSpec& w, int kmax, int lmax, int kmin) {
  for (int k = kmin; k <= kmax; ++k) {
    for (int l = 1; l <= lmax; ++l) {
      if (w(k, l) != w(k + 1, l - 1) + w(k, l - 1)) return false;
    }
  }
  return true;
}

Rational weighted_sum(const CensusTable& table, const WeightSpec& w) {
  Rational sum = 0;
  for (const auto& [key, count] : table.counts) sum += w(key.k, key.l) * Rational(count);
  return sum;
}

Rational poly_sum(const CensusTable& table, const Rational& x) {
  return weighted_sum(table, weights::poly(x));
}

Rational expected_closed_form(const std::string& name, int n, const WeightParams& p) {
  require_known(name);
  if (n < 3) throw Error(ErrorCode::BadParam, "closed forms need n >= 3");
  const Rational nn = n;
  const Rational pairs = rat(binomial(n, 2));
  if (name == "pow2") return rat(BigInt(1) << n) - nn * nn / 2 - nn / 2 - 1;
  if (name == "binomial") {
    if (p.m < 3 || p.m > n) throw Error(ErrorCode::BadParam, "binomial weight needs 3 <= m <= n");
    return rat(binomial(n, p.m));
  }
  if (name == "fib") return rat(fibonacci(2LL * n)) - nn - pairs;
  if (name == "fib_alt") return -rat(fibonacci(n)) + nn - pairs;
  if (name == "cheb_cos") return pairs + nn - 2 + cos_third_turn(n);
  if (name == "cheb_sin") return pairs - nn + sin_third_turn(n);
  return pow_int(1 + p.x, n) - 1 - p.x * nn - p.x * p.x * pairs;
}

Rational expected_closed_form_d(const std::string& name, int n, int d, const WeightParams& p) {
  require_known(name);
  if (d < 1) throw Error(ErrorCode::BadParam, "dimension must be positive");
  if (n < d + 1) throw Error(ErrorCode::BadParam, "closed forms need n >= d + 1");
  if (name == "binomial") {
    if (p.m < d + 1 || p.m > n) throw Error(ErrorCode::BadParam, "binomial weight needs d + 1 <= m <= n");
    return rat(binomial(n, p.m));
  }
  const WeightSpec w = catalogue_weight(name, p);
  Rational low = 0;
  for (int k = 0; k <= d; ++k) low += w(k, 0) * rat(binomial(n, k));
  return full_transform(name, n, p) - low;
}

BigInt moment_kernel(int r, long long k) {
  if (r == 0) return 1;
  if (r < 0 || k < 2LL * r) return 0;
  BigInt v = BigInt(k) * binomial(k - r - 1, r - 1);
  return v / r;
}

BigInt moment(const CensusTable& table, int r) {
  if (r < 0) throw Error(ErrorCode::BadR, "moment order must be >= 0");
  BigInt sum = 0;
  for (const auto& [key, count] : table.counts) {
    if (key.l != 0) continue;
    sum += sign_power(key.k + table.dim + 1) * moment_kernel(r, key.k) * count;
  }
  return sum;
}

BigInt expected_moment(int n, int h, int d, int r) {
  if (r != 0 && r != 1) throw Error(ErrorCode::BadR, "closed moment forms exist for r = 0, 1");
  BigInt sum = 0;
  for (int k = 0; k <= d; ++k) sum += sign_power(d - k) * (r == 0 ? BigInt(1) : BigInt(k)) * binomial(n, k);
  if (r == 1) sum += n - h;
  return sum;
}

BigInt mixed_moment_sum_unchecked(const CensusTable& table, int r) {
  if (r < 0) throw Error(ErrorCode::BadR, "mixed moment order must be >= 0");
  BigInt sum = 0;
  for (const auto& [key, count] : table.counts) {
    if (key.l > r) continue;
    sum += sign_power(key.k - key.l + 1 + table.dim) * moment_kernel(r - key.l, key.k - key.l) * count;
  }
  return sum;
}

BigInt mixed_moment_sum(const CensusTable& table, int r) {
  if (r < 0 || r > 2) throw Error(ErrorCode::BadR, "mixed moment sums are defined for 0 <= r <= 2");
  return mixed_moment_sum_unchecked(table, r);
}

BigInt expected_mixed_moment(int n, int d, int r) {
  if (r < 0 || r > 2) throw Error(ErrorCode::BadR, "mixed moment sums are defined for 0 <= r <= 2");
  BigInt sum = 0;
  for (int k = 0; k <= d; ++k) {
    BigInt term = binomial(n, k);
    if (r == 0) sum += sign_power(d - k) * term;
    else if (r == 1) sum += sign_power(d - k) * k * term;
    else sum += sign_power(d + k) * (BigInt(k) * (k - 3) / 2) * term;
  }
  return sum;
}

std::vector<VerificationReport> check_inequalities(const PointSet& s, int t) {
  if (s.dim() != 2) throw Error(ErrorCode::BadDimension, "inequalities are planar");
  if (t < 3) throw Error(ErrorCode::BadParam, "truncation index t must be >= 3");
  const int n = s.size();
  const int h = s.h();
  const ReportContext ctx{n, h, std::nullopt};
  const std::vector<OwnedPolygon> polys = collect(s);
  std::vector<VerificationReport> out;
  const std::string tag = "t=" + std::to_string(t);

  std::map<int, Count> column1;
  for (const auto& p : polys) {
    if (p.interior == 1) ++column1[static_cast<int>(p.vertices.size())];
  }
  {
    BigInt partial = 0;
    for (int k = 3; k <= t; ++k) {
      auto it = column1.find(k);
      if (it != column1.end()) partial += sign_power(k + 1) * BigInt(it->second);
    }
    const std::string rel = (t % 2 == 1) ? ">= " : "<= ";
    out.push_back({"ineq.l1." + tag, rel + std::to_string(n - h) + ", equality iff X(t+1,1)=0",
                   to_string(partial), truncation_ok(column1, t, n - h), ctx});
  }

  int edges = 0, edges_ok = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q || !has_point_left(s, {p, q})) continue;
      std::map<int, Count> by_k;
      for (const auto& poly : polys) {
        if (poly.interior == 0 && has_edge(poly.vertices, p, q)) ++by_k[static_cast<int>(poly.vertices.size())];
      }
      ++edges;
      if (truncation_ok(by_k, t, 1)) ++edges_ok;
    }
  }
  out.push_back({"ineq.edge." + tag, std::to_string(edges) + " edges", std::to_string(edges_ok) + " edges",
                 edges == edges_ok, ctx});

  int points = 0, points_ok = 0;
  for (int p = 0; p < n; ++p) {
    if (s.is_extreme(p)) continue;
    std::map<int, Count> by_k;
    for (const auto& poly : polys) {
      if (poly.interior == 1 && contains(s, poly.vertices, p)) ++by_k[static_cast<int>(poly.vertices.size())];
    }
    ++points;
    if (truncation_ok(by_k, t, 1)) ++points_ok;
  }
  out.push_back({"ineq.point." + tag, std::to_string(points) + " points", std::to_string(points_ok) + " points",
                 points == points_ok, ctx});

  const BigInt x31 = column1.count(3) ? column1.at(3) : 0;
  const BigInt x41 = column1.count(4) ? column1.at(4) : 0;
  const BigInt bound = x31 - n + h;
  out.push_back({"ineq.x41", ">= " + to_string(bound), to_string(x41), x41 >= bound, ctx});
  return out;
}

int RationalMatrix::rank() const {
  RationalMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m(rank, j), m(pivot, j));
    for (int r = rank + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(rank, c);
      for (int j = c; j < cols_; ++j) m(r, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> RationalMatrix::solve(std::vector<Rational> b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_) {
    throw Error(ErrorCode::BadDimension, "solve needs a square system");
  }
  RationalMatrix m = *this;
  const int n = rows_;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorCode::SingularSystem, "matrix is singular");
    for (int j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
      b[r] -= factor * b[c];
    }
  }
  for (int r = 0; r < n; ++r) b[r] /= m(r, r);
  return b;
}

int vandermonde_rank(int n, std::span<const Rational> xs, int d) {
  if (static_cast<int>(xs.size()) != n - d || n - d < 1) {
    throw Error(ErrorCode::BadDimension, "need exactly n - d = " + std::to_string(n - d) + " evaluation points");
  }
  require_distinct_nonzero(xs);
  RationalMatrix m(n - d, n - d);
  for (int j = 0; j < n - d; ++j) {
    for (int k = d + 1; k <= n; ++k) m(j, k - d - 1) = pow_int(xs[j], k);
  }
  return m.rank();
}

int weight_matrix_rank(int n, std::span<const WeightSpec> ws, int d) {
  std::vector<KL> columns;
  for (int k = d + 1; k <= n; ++k) {
    for (int l = 0; l <= n - k; ++l) columns.push_back({k, l});
  }
  RationalMatrix m(static_cast<int>(ws.size()), static_cast<int>(columns.size()));
  for (std::size_t j = 0; j < ws.size(); ++j) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      m(static_cast<int>(j), static_cast<int>(c)) = ws[j](columns[c].k, columns[c].l);
    }
  }
  return m.rank();
}

std::vector<Rational> decompose_weight(const WeightSpec& w, int n, std::span<const Rational> xs, int d) {
  if (static_cast<int>(xs.size()) != n - d || n - d < 1) {
    throw Error(ErrorCode::BadDimension, "need exactly n - d = " + std::to_string(n - d) + " evaluation points");
  }
  require_distinct_nonzero(xs);
  if (!check_recurrence(w, n, std::max(1, n - d - 1), d + 1)) {
    throw Error(ErrorCode::BadParam, "weight '" + w.name + "' does not satisfy the recurrence");
  }
  const int size = n - d;
  RationalMatrix m(size, size);
  std::vector<Rational> rhs(size);
  for (int k = d + 1; k <= n; ++k) {
    for (int j = 0; j < size; ++j) m(k - d - 1, j) = pow_int(xs[j], k);
    rhs[k - d - 1] = w(k, 0);
  }
  return m.solve(std::move(rhs));
}

}  // namespace islands
