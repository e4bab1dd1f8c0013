#include "bht/surd.hpp"

#include <doctest.h>

#include <random>

using namespace bht;

namespace {

QuadSurd qs(long long an, long long ad, long long bn, long long bd, long long d) {
  return QuadSurd::normalized(Rational(an, ad), Rational(bn, bd), d);
}

// Independent root oracle: bisection on rationals, no shared code with
// QuadSurd::eval. Returns an enclosure of sqrt(d) of width 2^-bits.
std::pair<Rational, Rational> bisect_sqrt(const BigInt& d, int bits) {
  Rational lo = 0, hi = Rational(d) + 1;
  for (int i = 0; i < bits; ++i) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= Rational(d))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

std::string oracle_eval(const Rational& a, const Rational& b, const BigInt& d, int digits) {
  auto [lo, hi] = bisect_sqrt(d, 40 + 4 * digits);
  Rational vlo = a + b * lo, vhi = a + b * hi;
  if (b < 0) std::swap(vlo, vhi);
  std::string slo = format_significant(vlo, digits);
  std::string shi = format_significant(vhi, digits);
  REQUIRE(slo == shi);
  return slo;
}

}  // namespace

TEST_SUITE("surd") {
  TEST_CASE("normalization absorbs square factors") {
    QuadSurd a = surd_normalize(0, 3, 9);
    CHECK(a.rational_part() == Rational(9));
    CHECK(a.surd_coefficient() == 0);
    CHECK(a.radicand() == 0);

    QuadSurd b = surd_normalize(Rational(61, 2), Rational(3, 2), 65);
    CHECK(b.rational_part() == Rational(61, 2));
    CHECK(b.surd_coefficient() == Rational(3, 2));
    CHECK(b.radicand() == 65);

    QuadSurd c = surd_normalize(1, 1, 8);
    CHECK(c.rational_part() == Rational(1));
    CHECK(c.surd_coefficient() == Rational(2));
    CHECK(c.radicand() == 2);
  }

  TEST_CASE("decimal evaluation at requested digits") {
    // frozen from the bisection oracle: (11 - sqrt 65)/28 = 0.10491936613...
    CHECK(oracle_eval(Rational(11, 28), Rational(-1, 28), 65, 6) == "0.104919");
    CHECK(qs(11, 28, -1, 28, 65).eval(6) == "0.104919");
    CHECK(QuadSurd(0).eval(6) == "0.000000");
    CHECK(qs(6, 12, -1, 12, 6).eval(6) == "0.295876");
    CHECK(QuadSurd(Rational(1, 2)).eval(3) == "0.500");
  }

  TEST_CASE("evaluation agrees with the bisection oracle") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
      auto r = [&](int lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
      Rational a(r(40), 1 + (rng() % 9)), b(r(40), 1 + (rng() % 9));
      BigInt d = rng() % 120;
      QuadSurd v = surd_normalize(a, b, d);
      CHECK(v.eval(30) == oracle_eval(a, b, d, 30));
    }
  }

  TEST_CASE("quadratic solving: exact roots and discriminants") {
    QuadRoots r = quad_solve(1, -69, 1176);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.discriminant == QuadSurd(57));
    CHECK(r.roots[0] == qs(69, 2, -1, 2, 57));
    CHECK(r.roots[1] == qs(69, 2, 1, 2, 57));

    r = quad_solve(8, -6, 1);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == QuadSurd(Rational(1, 4)));
    CHECK(r.roots[1] == QuadSurd(Rational(1, 2)));

    r = quad_solve(0, 2, -1);
    CHECK(r.linear);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0] == QuadSurd(Rational(1, 2)));

    CHECK(quad_solve(1, 0, 1).roots.empty());       // negative discriminant
    CHECK(quad_solve(1, -2, 1).roots.size() == 1);  // double root
    CHECK_THROWS_AS(quad_solve(0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(quad_solve(qs(0, 1, 1, 1, 2), 1, 1), std::invalid_argument);
  }

  TEST_CASE("Vieta identities hold exactly for random quadratics") {
    std::mt19937_64 rng(7);
    int solved = 0;
    for (int i = 0; i < 400; ++i) {
      auto r = [&](int lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
      Rational c2(r(30), 1 + (rng() % 7)), c1(r(30), 1 + (rng() % 7)), c0(r(30), 1 + (rng() % 7));
      if (c2 == 0 && c1 == 0 && c0 == 0) continue;
      QuadRoots out = quad_solve(c2, c1, c0);
      if (out.roots.size() != 2) continue;
      ++solved;
      QuadSurd sum = out.roots[0] + out.roots[1];
      QuadSurd prod = out.roots[0] * out.roots[1];
      CHECK(sum == QuadSurd(Rational(-c1 / c2)));
      CHECK(prod == QuadSurd(Rational(c0 / c2)));
      // ordering agrees with high-precision decimals
      CHECK(out.roots[0] <= out.roots[1]);
      if (out.roots[0] != out.roots[1]) {
        Rational lo = out.roots[0].approximate(50), hi = out.roots[1].approximate(50);
        CHECK(lo < hi);
      }
    }
    CHECK(solved > 100);
  }

  TEST_CASE("round trip: normalized evaluation matches the raw value") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 20; ++i) {
      auto r = [&](int lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
      Rational a(r(20), 1 + (rng() % 5)), b(r(20), 1 + (rng() % 5));
      BigInt d = (rng() % 50) * (rng() % 50);  // often non-squarefree
      CHECK(surd_normalize(a, b, d).eval(25) == oracle_eval(a, b, d, 25));
    }
  }

  TEST_CASE("field arithmetic stays in one radicand") {
    QuadSurd x = qs(11, 28, -1, 28, 65);
    QuadSurd inv = QuadSurd(1) / x;
    CHECK(x * inv == QuadSurd(1));
    CHECK(x - x == QuadSurd(0));
    CHECK((x + x) == QuadSurd(2) * x);

    QuadSurd root2 = surd_normalize(0, 1, 2);
    QuadSurd root3 = surd_normalize(0, 1, 3);
    CHECK_THROWS_AS((void)(root2 + root3), mixed_radicand_error);
    CHECK_THROWS_AS((void)(root2 * root3), mixed_radicand_error);
    CHECK_NOTHROW((void)(root2 * QuadSurd(5)));
    CHECK_THROWS_AS((void)(x / QuadSurd(0)), std::domain_error);
  }

  TEST_CASE("exact sign determination") {
    CHECK(qs(11, 28, -1, 28, 65).sign() == 1);    // 11 > sqrt(65)
    CHECK(qs(8, 1, -1, 1, 65).sign() == -1);      // 8 < sqrt(65)
    CHECK(qs(-3, 2, 1, 2, 65).sign() == 1);       // sqrt(65) > 3
    CHECK(QuadSurd(0).sign() == 0);
    CHECK(qs(0, 1, -1, 1, 2).sign() == -1);
  }

  TEST_CASE("exact square roots denest when possible") {
    auto r = surd_sqrt(qs(37, 2, -3, 2, 65));
    REQUIRE(r.has_value());
    CHECK(*r == qs(-3, 2, 1, 2, 65));

    CHECK(*surd_sqrt(QuadSurd(Rational(9, 4))) == QuadSurd(Rational(3, 2)));
    CHECK(*surd_sqrt(QuadSurd(8)) == surd_normalize(0, 2, 2));
    CHECK(*surd_sqrt(QuadSurd(0)) == QuadSurd(0));

    CHECK(!surd_sqrt(qs(1, 1, 1, 1, 2)).has_value());    // sqrt(1+sqrt 2)
    CHECK(!surd_sqrt(qs(61, 2, 3, 2, 65)).has_value());  // N square, no denesting
    CHECK_THROWS_AS((void)surd_sqrt(QuadSurd(-1)), std::domain_error);
  }

  TEST_CASE("square-root round trip: sqrt(x^2) recovers |x|") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 100; ++i) {
      auto r = [&](int lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
      Rational a(r(25), 1 + (rng() % 6)), b(r(25), 1 + (rng() % 6));
      BigInt d = rng() % 90;
      QuadSurd x = surd_normalize(a, b, d);
      auto root = surd_sqrt(x * x);
      REQUIRE(root.has_value());
      CHECK(*root == (x.sign() < 0 ? -x : x));
    }
  }

  TEST_CASE("display forms") {
    CHECK(qs(11, 28, -1, 28, 65).to_string() == "(11-√65)/28");
    CHECK(qs(61, 2, 3, 2, 65).to_string() == "(61+3√65)/2");
    CHECK(surd_normalize(0, 1, 2).to_string() == "√2");
    CHECK(surd_normalize(0, 2, 2).to_string() == "2√2");
    CHECK(QuadSurd(Rational(3, 4)).to_string() == "3/4");
    CHECK(QuadSurd(-5).to_string() == "-5");
    CHECK(qs(15, 22, -3, 22, 3).to_string() == "(15-3√3)/22");
    CHECK(surd_normalize(0, Rational(3, 28), 65).to_string() == "3√65/28");
  }
}
