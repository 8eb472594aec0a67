#pragma once

// Exact integer and rational helpers shared by every module.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace islands {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Number of polygons/polytopes with a given (k, l). Enumeration at desk
/// scale cannot come close to overflowing 64 bits.
using Count = std::uint64_t;

BigInt binomial(long long n, long long k);

/// Fibonacci numbers on all of Z, with Fib(-n) = (-1)^(n+1) Fib(n).
BigInt fibonacci(long long n);

/// (-1)^e for any integer e.
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// base^e for e >= 0, with 0^0 = 1.
Rational pow_int(const Rational& base, int e);

/// Parses "p/q" or "p" into an exact rational. Throws Error(BadParam).
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace islands
