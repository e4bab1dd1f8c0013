#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

namespace bht {

// Exact integer and rational carriers. All closed-form radii and quadratic
// discriminants in this library are computed over these types; nothing is
// rounded until a decimal rendering is requested.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Real = long double;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Real to_real(const Rational& r) { return r.convert_to<Real>(); }

inline BigInt pow10(int k) {
  BigInt p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

/// Floor of the integer square root. Input must be nonnegative.
BigInt isqrt_floor(const BigInt& v);

/// If v is a perfect square, its exact square root.
std::optional<BigInt> exact_integer_sqrt(const BigInt& v);

/// If r is the square of a rational, that (nonnegative) rational.
std::optional<Rational> exact_rational_sqrt(const Rational& r);

/// Split d >= 0 as d = square * squarefree; returns (sqrt(square), squarefree).
std::pair<BigInt, BigInt> split_square_part(const BigInt& d);

/// Round a rational to the nearest integer, ties to even.
BigInt round_half_even(const Rational& r);

/// Decimal rendering with `digits` significant digits, correctly rounded.
/// Zero renders as "0." followed by `digits` zeros.
std::string format_significant(const Rational& r, int digits);

}  // namespace bht
