#include "bht/surd.hpp"

#include <algorithm>
#include <cmath>

namespace bht {

// ---------------------------------------------------------------------------
// rational helpers
// ---------------------------------------------------------------------------

BigInt isqrt_floor(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt_floor: negative input");
  if (v == 0) return 0;
  BigInt r = boost::multiprecision::sqrt(v);
  // boost's integer sqrt is already the floor; guard against edge rounding.
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::optional<BigInt> exact_integer_sqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = isqrt_floor(v);
  if (r * r == v) return r;
  return std::nullopt;
}

std::optional<Rational> exact_rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto n = exact_integer_sqrt(num(r));
  if (!n) return std::nullopt;
  auto d = exact_integer_sqrt(den(r));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

std::pair<BigInt, BigInt> split_square_part(const BigInt& d) {
  if (d < 0) throw std::domain_error("split_square_part: negative radicand");
  BigInt square_root = 1, rest = d;
  for (BigInt f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square_root *= f;
    }
  }
  return {square_root, rest};
}

BigInt round_half_even(const Rational& r) {
  BigInt n = num(r), d = den(r);
  BigInt q = n / d, rem = n % d;  // truncated toward zero
  if (rem < 0) {
    q -= 1;
    rem += d;
  }
  BigInt twice = 2 * rem;
  if (twice > d || (twice == d && q % 2 != 0)) q += 1;
  return q;
}

namespace {

// floor(log10(|r|)) for r != 0.
int floor_log10(const Rational& r) {
  Rational v = r < 0 ? Rational(-r) : r;
  std::string ns = num(v).str(), ds = den(v).str();
  int e = static_cast<int>(ns.size()) - static_cast<int>(ds.size());
  // candidate e such that 10^e <= v < 10^(e+1); correct by comparison
  auto geq_pow10 = [&](int k) {
    if (k >= 0) return v >= Rational(pow10(k));
    return v * Rational(pow10(-k)) >= 1;
  };
  while (!geq_pow10(e)) --e;
  while (geq_pow10(e + 1)) ++e;
  return e;
}

}  // namespace

std::string format_significant(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("format_significant: digits < 1");
  if (r == 0) return "0." + std::string(static_cast<size_t>(digits), '0');

  bool negative = r < 0;
  Rational v = negative ? Rational(-r) : r;
  int e = floor_log10(v);

  auto scaled = [&](int exp10) {
    // v * 10^(digits - 1 - exp10)
    int k = digits - 1 - exp10;
    if (k >= 0) return v * Rational(pow10(k));
    return v / Rational(pow10(-k));
  };
  BigInt n = round_half_even(scaled(e));
  if (n >= pow10(digits)) {  // rounding carried into the next decade
    ++e;
    n = round_half_even(scaled(e));
  }

  std::string ds = n.str();
  std::string out;
  if (e >= digits - 1) {
    out = ds + std::string(static_cast<size_t>(e - digits + 1), '0');
  } else if (e >= 0) {
    out = ds.substr(0, static_cast<size_t>(e + 1)) + "." + ds.substr(static_cast<size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + ds;
  }
  return negative ? "-" + out : out;
}

// ---------------------------------------------------------------------------
// QuadSurd
// ---------------------------------------------------------------------------

QuadSurd QuadSurd::normalized(const Rational& a, const Rational& b, const BigInt& d) {
  if (d < 0) throw std::domain_error("QuadSurd: negative radicand");
  QuadSurd out;
  out.a_ = a;
  if (b == 0 || d == 0) return out;
  auto [sq, rest] = split_square_part(d);
  if (rest == 1) {
    out.a_ = a + b * Rational(sq);
    return out;
  }
  out.b_ = b * Rational(sq);
  out.d_ = rest;
  return out;
}

Rational QuadSurd::as_rational() const {
  if (!is_rational()) throw std::domain_error("QuadSurd: value is irrational");
  return a_;
}

int QuadSurd::sign() const {
  auto rsign = [](const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); };
  if (b_ == 0) return rsign(a_);
  if (a_ == 0) return rsign(b_);
  int sa = rsign(a_), sb = rsign(b_);
  if (sa == sb) return sa;
  // |a| vs |b| sqrt(d): compare a^2 with b^2 d; equality would force
  // d to be a perfect square, which the canonical form excludes.
  Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

namespace {

BigInt common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.radicand() == 0) return y.radicand();
  if (y.radicand() == 0 || x.radicand() == y.radicand()) return x.radicand();
  throw mixed_radicand_error("QuadSurd: mixed radicands " + x.radicand().str() + " and " +
                             y.radicand().str());
}

}  // namespace

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  BigInt d = common_radicand(*this, o);
  return normalized(a_ + o.a_, b_ + o.b_, d);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const { return *this + (-o); }

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  BigInt d = common_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  return normalized(a, b, d);
}

QuadSurd QuadSurd::operator/(const QuadSurd& o) const {
  if (o.is_zero()) throw std::domain_error("QuadSurd: division by zero");
  BigInt d = common_radicand(*this, o);
  // multiply by the conjugate; the norm a^2 - b^2 d vanishes only at zero
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  QuadSurd conj;
  conj.a_ = o.a_ / norm;
  conj.b_ = -o.b_ / norm;
  conj.d_ = o.b_ == 0 ? BigInt(0) : d;
  return *this * conj;
}

Real QuadSurd::to_real() const {
  Real v = bht::to_real(a_);
  if (b_ != 0) v += bht::to_real(b_) * std::sqrt(d_.convert_to<Real>());
  return v;
}

Rational QuadSurd::approximate(int digits) const {
  if (b_ == 0) return a_;
  int k = digits + 6;
  BigInt scale = pow10(k);
  BigInt s = isqrt_floor(d_ * scale * scale);
  // midpoint of the enclosure [s, s+1]/scale
  Rational root(2 * s + 1, 2 * scale);
  return a_ + b_ * root;
}

std::string QuadSurd::eval(int digits) const {
  if (digits < 1) throw std::invalid_argument("QuadSurd::eval: digits < 1");
  if (b_ == 0) return format_significant(a_, digits);
  for (int k = digits + 12;; k *= 2) {
    BigInt scale = pow10(k);
    BigInt s = isqrt_floor(d_ * scale * scale);
    Rational lo = a_ + b_ * Rational(s, scale);
    Rational hi = a_ + b_ * Rational(s + 1, scale);
    if (b_ < 0) std::swap(lo, hi);
    std::string slo = format_significant(lo, digits);
    std::string shi = format_significant(hi, digits);
    if (slo == shi) return slo;
    if (k > 16 * (digits + 12)) return slo;  // value sits on a rounding boundary
  }
}

std::string QuadSurd::to_string() const {
  auto rational_str = [](const Rational& r) {
    return den(r) == 1 ? num(r).str() : num(r).str() + "/" + den(r).str();
  };
  if (b_ == 0) return rational_str(a_);

  // common denominator L: value = (A + B*sqrt(d)) / L with integers A, B
  BigInt L = boost::multiprecision::lcm(den(a_), den(b_));
  BigInt A = num(a_) * (L / den(a_));
  BigInt B = num(b_) * (L / den(b_));

  std::string surd = "√" + d_.str();
  std::string body;
  if (B == 1)
    body = surd;
  else if (B == -1)
    body = "-" + surd;
  else
    body = B.str() + surd;
  if (A != 0) body = A.str() + (B > 0 ? "+" : "") + body;

  if (L == 1) return body;
  bool needs_parens = A != 0;
  return (needs_parens ? "(" + body + ")" : body) + "/" + L.str();
}

// ---------------------------------------------------------------------------
// square roots and quadratics
// ---------------------------------------------------------------------------

std::optional<QuadSurd> surd_sqrt(const QuadSurd& x) {
  int s = x.sign();
  if (s < 0) throw std::domain_error("surd_sqrt: negative value");
  if (s == 0) return QuadSurd();

  if (x.is_rational()) {
    // sqrt(p/q) = sqrt(p*q)/q
    Rational r = x.rational_part();
    BigInt t = num(r) * den(r);
    auto [sq, rest] = split_square_part(t);
    if (rest == 1) return QuadSurd(Rational(sq, den(r)));
    return QuadSurd::normalized(0, Rational(sq, den(r)), rest);
  }

  // Denesting: sqrt(A + C sqrt(D)) = u + v sqrt(D) requires
  // N = A^2 - C^2 D to be a rational square; then {u^2, v^2 D} = (A +- sqrt(N))/2.
  const Rational& A = x.rational_part();
  const Rational& C = x.surd_coefficient();
  Rational D(x.radicand());
  Rational N = A * A - C * C * D;
  if (N < 0) return std::nullopt;
  auto sN = exact_rational_sqrt(N);
  if (!sN) return std::nullopt;

  const Rational candidates[2] = {Rational((A + *sN) / 2), Rational((A - *sN) / 2)};
  for (const Rational& cand : candidates) {
    if (cand < 0) continue;
    auto u = exact_rational_sqrt(cand);
    if (!u) continue;
    if (*u == 0) continue;  // would need C == 0, handled by the rational path
    Rational v = C / (2 * *u);
    if (*u * *u + v * v * D != A) continue;
    QuadSurd root = QuadSurd::normalized(*u, v, x.radicand());
    if (root.sign() < 0) root = -root;
    return root;
  }
  return std::nullopt;
}

QuadRoots quad_solve(const QuadSurd& c2, const QuadSurd& c1, const QuadSurd& c0) {
  if (!c2.is_rational() || !c1.is_rational() || !c0.is_rational())
    throw std::invalid_argument("quad_solve: coefficients must be rational");
  Rational a = c2.rational_part(), b = c1.rational_part(), c = c0.rational_part();
  if (a == 0 && b == 0 && c == 0)
    throw std::domain_error("quad_solve: identically zero equation");

  QuadRoots out;
  Rational disc = b * b - 4 * a * c;
  out.discriminant = QuadSurd(disc);

  if (a == 0) {
    out.linear = true;
    if (b != 0) out.roots.push_back(QuadSurd(-c / b));
    return out;
  }
  if (disc < 0) return out;
  if (disc == 0) {
    out.roots.push_back(QuadSurd(-b / (2 * a)));
    return out;
  }
  // sqrt(disc) = sqrt(P*Q)/Q for disc = P/Q
  BigInt t = num(disc) * den(disc);
  auto [sq, rest] = split_square_part(t);
  Rational base = -b / (2 * a);
  Rational coeff = Rational(sq, den(disc)) / (2 * a);
  QuadSurd r1 = QuadSurd::normalized(base, -coeff, rest);
  QuadSurd r2 = QuadSurd::normalized(base, coeff, rest);
  if (r2 < r1) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

}  // namespace bht
