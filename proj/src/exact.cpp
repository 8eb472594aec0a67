#include "islands/exact.hpp"

#include <cctype>

#include "islands/error.hpp"

namespace islands {

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt fibonacci(long long n) {
  if (n < 0) {
    const long long m = -n;
    BigInt f = fibonacci(m);
    return (m % 2 == 1) ? f : BigInt(-f);
  }
  BigInt a = 0, b = 1;
  for (long long i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Rational pow_int(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_bigint(const std::string& s) {
  if (s[0] == '+') return BigInt(s.substr(1));
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(ErrorCode::BadParam, "not a rational number: '" + text + "'");
  }
  BigInt d = parse_bigint(den);
  if (d == 0) throw Error(ErrorCode::BadParam, "zero denominator in '" + text + "'");
  BigInt n = parse_bigint(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace islands
