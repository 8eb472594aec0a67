#pragma once

// Weight functions f(k, l) satisfying f(k, l) = f(k+1, l-1) + f(k, l-1),
// their census sums and closed forms, alternating moments and the mixed
// moment sums, plus exact rank/decomposition of the weight space.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "islands/census.hpp"
#include "islands/exact.hpp"
#include "islands/report.hpp"

namespace islands {

enum class WeightKind { Catalogue, UserBaseRow, Custom };

struct WeightSpec {
  std::string name;
  WeightKind kind = WeightKind::Custom;
  std::function<Rational(int k, int l)> f;

  Rational operator()(int k, int l) const { return f(k, l); }
};

/// 2cos(m*pi/3), an integer in {-2, -1, 1, 2}.
int cos_third_turn(long long m);
/// (2/sqrt 3) sin(m*pi/3), an integer in {-1, 0, 1}.
int sin_third_turn(long long m);

/// A user-supplied row f(k, 0) for k = first_k .. first_k + values.size() - 1.
struct BaseRow {
  int first_k = 3;
  std::vector<Rational> values;

  int last_k() const { return first_k + static_cast<int>(values.size()) - 1; }
  const Rational& at(int k) const;  // throws RangeExceeded
};

/// sum_{i=0}^{l} C(l, i) base(k + i).
Rational expand_base_row(const BaseRow& base, int k, int l);
Rational expand_base_row(const std::function<Rational(int)>& base, int k, int l);

/// Named catalogue entries. `m` is used by "binomial", `x` by "poly".
struct WeightParams {
  int m = 0;
  Rational x = 0;
};

namespace weights {
WeightSpec pow2();
WeightSpec binomial(int m);
WeightSpec fib_up();   // Fib(k + 2l)
WeightSpec fib_alt();  // (-1)^(k+l) Fib(k - l)
WeightSpec cheb_cos();
WeightSpec cheb_sin();
WeightSpec poly(const Rational& x);  // x^k (1+x)^l, with (1+x)^0 = 1 at x = -1
WeightSpec from_base_row(std::string name, BaseRow row);
WeightSpec custom(std::string name, std::function<Rational(int, int)> f);
}  // namespace weights

/// All catalogue names, in reporting order.
const std::vector<std::string>& catalogue_names();

/// Throws UnknownIdentity / BadParam.
WeightSpec catalogue_weight(const std::string& name, const WeightParams& params = {});

/// True iff the recurrence holds on kmin <= k <= kmax, 1 <= l <= lmax.
bool check_recurrence(const WeightSpec& w, int kmax, int lmax, int kmin = 3);

Rational weighted_sum(const CensusTable& table, const WeightSpec& w);

/// sum x^k (1+x)^l X(k, l).
Rational poly_sum(const CensusTable& table, const Rational& x);

/// Right-hand side of the planar closed form for the named weight, written
/// in its planar shape (e.g. 2^n - n^2/2 - n/2 - 1).
Rational expected_closed_form(const std::string& name, int n, const WeightParams& params = {});

/// The same closed form for dimension d: the full binomial transform of the
/// base row minus its terms k = 0..d.
Rational expected_closed_form_d(const std::string& name, int n, int d, const WeightParams& params = {});

/// m_r(k): 1 for r = 0; (k/r) C(k-r-1, r-1) for r >= 1, k >= 2r; else 0.
BigInt moment_kernel(int r, long long k);

/// sum_k (-1)^(k+d+1) m_r(k) X(k, 0).
BigInt moment(const CensusTable& table, int r);

/// Closed form of the moment for r in {0, 1} (depends on n, h, d).
BigInt expected_moment(int n, int h, int d, int r);

/// sum_k sum_{l=0}^{r} (-1)^(k-l+1+d) m_{r-l}(k-l) X(k, l), for 0 <= r <= 2.
BigInt mixed_moment_sum(const CensusTable& table, int r);

/// The same sum for any r >= 0. Only r <= 2 has a known closed form.
BigInt mixed_moment_sum_unchecked(const CensusTable& table, int r);

BigInt expected_mixed_moment(int n, int d, int r);

/// Truncated-alternating-sum inequalities for a given t >= 3: the l = 1
/// column against n - h, the l = 0 column of every directed edge with a
/// nonempty left side against 1, every interior point's column against 1,
/// and X(4,1) >= X(3,1) - n + h.
std::vector<VerificationReport> check_inequalities(const PointSet& s, int t);

/// Dense exact matrix with Gaussian elimination.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  int rank() const;
  /// Solves the square system A x = b. Throws SingularSystem.
  std::vector<Rational> solve(std::vector<Rational> b) const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

/// Rank of the matrix [x_j^k] for k = d+1..n, with n-d distinct nonzero x_j.
int vandermonde_rank(int n, std::span<const Rational> xs, int d = 2);

/// Rank of the matrix whose rows are the given weights evaluated at every
/// (k, l) with d+1 <= k <= n, 0 <= l <= n-k.
int weight_matrix_rank(int n, std::span<const WeightSpec> ws, int d = 2);

/// Coefficients c_j with f(k, 0) = sum_j c_j x_j^k for d+1 <= k <= n.
std::vector<Rational> decompose_weight(const WeightSpec& w, int n, std::span<const Rational> xs, int d = 2);

}  // namespace islands
