#pragma once

#include "bht/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bht {

struct mixed_radicand_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A number a + b*sqrt(d) with rational a, b and nonnegative integer d.
// Canonical form: d is squarefree or zero, and d == 0 implies b == 0.
// Arithmetic stays inside a single radicand; combining two values with
// distinct nonzero radicands throws mixed_radicand_error.
class QuadSurd {
 public:
  QuadSurd() : a_(0), b_(0), d_(0) {}
  QuadSurd(const Rational& r) : a_(r), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(long long v) : a_(v), b_(0), d_(0) {}        // NOLINT(google-explicit-constructor)

  /// Canonicalizing constructor: absorbs square factors of d into b.
  static QuadSurd normalized(const Rational& a, const Rational& b, const BigInt& d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// The exact value as a rational; throws if the value is irrational.
  Rational as_rational() const;

  /// -1, 0, or +1. Exact, no floating point.
  int sign() const;

  QuadSurd operator-() const;
  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd operator/(const QuadSurd& o) const;

  bool operator==(const QuadSurd& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
  bool operator!=(const QuadSurd& o) const { return !(*this == o); }
  bool operator<(const QuadSurd& o) const { return (*this - o).sign() < 0; }
  bool operator>(const QuadSurd& o) const { return o < *this; }
  bool operator<=(const QuadSurd& o) const { return !(o < *this); }
  bool operator>=(const QuadSurd& o) const { return !(*this < o); }

  Real to_real() const;

  /// Rational approximation with error below 10^-digits.
  Rational approximate(int digits) const;

  /// Correctly rounded decimal string with `digits` significant digits.
  std::string eval(int digits) const;

  /// Display form, e.g. "(11-√65)/28", "3/4", "√2", "-5".
  std::string to_string() const;

 private:
  Rational a_, b_;
  BigInt d_;
};

/// surd_normalize: canonical QuadSurd for a + b*sqrt(d).
inline QuadSurd surd_normalize(const Rational& a, const Rational& b, const BigInt& d) {
  return QuadSurd::normalized(a, b, d);
}

/// Exact square root if it exists in some Q(sqrt(D)).
/// Rational inputs always succeed (possibly introducing a radicand);
/// a + b*sqrt(d) succeeds only when the root denests into Q(sqrt(d)).
/// Negative inputs throw std::domain_error.
std::optional<QuadSurd> surd_sqrt(const QuadSurd& x);

struct QuadRoots {
  std::vector<QuadSurd> roots;  // sorted ascending
  QuadSurd discriminant;        // c1^2 - 4*c2*c0 (rational)
  bool linear = false;          // c2 == 0 degenerate case
};

/// Exact roots of c2 x^2 + c1 x + c0 = 0 for rational coefficients.
/// All-zero coefficients throw std::domain_error; a negative discriminant
/// yields zero roots.
QuadRoots quad_solve(const QuadSurd& c2, const QuadSurd& c1, const QuadSurd& c0);

}  // namespace bht
