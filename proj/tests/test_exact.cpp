#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/exact.hpp"
#include "support.hpp"

using namespace leibniz;
using testing::GR;

TEST_CASE("gaussian rationals: arithmetic and printing") {
  const GR half(Rational(1, 2));
  const GR i = GR::i();
  CHECK(i * i == GR(-1));
  CHECK((half + i) * (half - i) == GR(Rational(5, 4)));
  CHECK(GR(Rational(2, 4)) == half);
  CHECK((GR(1) + i).inverse() == GR(Rational(1, 2), Rational(-1, 2)));
  CHECK_THROWS_AS(GR(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(GR(1) / GR(0), DivisionByZero);

  CHECK(to_string(half) == "1/2");
  CHECK(to_string(i) == "i");
  CHECK(to_string(-half * i) == "-1/2*i");
  CHECK(to_string(GR(Rational(1, 2), Rational(1, 3))) == "1/2+1/3*i");
  CHECK(to_string(GR(Rational(-3), Rational(-1))) == "-3-i");
}

TEST_CASE("gaussian rationals: field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const GR a = testing::random_gaussian(rng), b = testing::random_gaussian(rng), c = testing::random_gaussian(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GR(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == GR(1));
    CHECK((a * a.conj()).im() == 0);
  }
}

TEST_CASE("gaussian rationals: square roots") {
  CHECK(try_sqrt(GR(4)) == GR(2));
  CHECK(try_sqrt(GR(-1)) == GR::i());
  CHECK(try_sqrt(GR(Rational(9, 4))) == GR(Rational(3, 2)));
  CHECK_FALSE(try_sqrt(GR(2)).has_value());
  CHECK_FALSE(try_sqrt(GR(-3)).has_value());
  // (1+2i)^2 = -3+4i
  auto r = try_sqrt(GR(-3, 4));
  REQUIRE(r.has_value());
  CHECK(*r * *r == GR(-3, 4));
  CHECK_FALSE(try_sqrt(GR(0, 1)).has_value());  // sqrt(i) needs sqrt(2)

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const GR z = testing::random_gaussian(rng);
    auto s = try_sqrt(z * z);
    REQUIRE(s.has_value());
    CHECK(*s * *s == z * z);
  }
}

TEST_CASE("polynomials") {
  const Polynomial t = Polynomial::variable();
  const Polynomial p = t * t + GR(Rational(1, 2)) * t;
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "t^2 + 1/2*t");
  CHECK(to_string(t - GR(1), "eps") == "eps - 1");
  CHECK(to_string(GR(1, 1) * t) == "(1+i)*t");
  CHECK(Polynomial().degree() == -1);
  CHECK(p.order_at_zero() == 1);
  CHECK(p.evaluate(GR(2)) == GR(5));

  const Polynomial a = (t - GR(1)) * (t + GR(2)) * (t * t + GR(1));
  const Polynomial b = (t - GR(1)) * (t - GR(3));
  CHECK(gcd(a, b) == t - GR(1));
  auto qr = divmod(a, b);
  CHECK(qr.quotient * b + qr.remainder == a);
  CHECK(qr.remainder.degree() < b.degree());
  CHECK_THROWS_AS(divmod(a, Polynomial()), DivisionByZero);

  auto s = try_sqrt((t + GR(0, 1)) * (t + GR(0, 1)));
  REQUIRE(s.has_value());
  CHECK(*s * *s == (t + GR(0, 1)) * (t + GR(0, 1)));
  CHECK_FALSE(try_sqrt(t).has_value());
}

TEST_CASE("rational functions: canonical form and arithmetic") {
  const RationalFunction t = RationalFunction::variable();
  const RationalFunction r = (t * t - RationalFunction(1)) / (GR(2) * (t - RationalFunction(1)));
  CHECK(r == (t + RationalFunction(1)) / RationalFunction(2));
  CHECK(r.den().degree() == 0);
  CHECK(r.den().leading() == GR(1));
  CHECK(to_string(t.inverse() * t.inverse(), "eps") == "1/eps^2");
  CHECK(to_string((t + RationalFunction(1)) / t) == "(t + 1)/t");
  CHECK(to_string(RationalFunction(GR(Rational(1, 4)))) == "1/4");
  CHECK_THROWS_AS(RationalFunction::zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS((RationalFunction(1) / t).evaluate(GR(0)), DivisionByZero);
  CHECK((RationalFunction(1) / (t + RationalFunction(1))).evaluate(GR(1)) == GR(Rational(1, 2)));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction a = RationalFunction(testing::random_gaussian(rng)) * t + testing::random_gaussian(rng);
    const RationalFunction b = RationalFunction(testing::random_gaussian(rng)) * t * t + RationalFunction(1);
    const RationalFunction c = t - RationalFunction(testing::random_gaussian(rng));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction::one());
    CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational functions: valuation and limit at zero") {
  const RationalFunction t = RationalFunction::variable();
  CHECK(valuation_at_zero(t * t / (t + RationalFunction(1))) == 2);
  CHECK(valuation_at_zero(RationalFunction(3)) == 0);
  CHECK(valuation_at_zero(RationalFunction(1) / (t * t * t)) == -3);
  CHECK_THROWS_AS(valuation_at_zero(RationalFunction::zero()), InvalidArgument);

  CHECK(limit_at_zero(t / (t + RationalFunction(1))) == GR(0));
  CHECK(limit_at_zero((t + RationalFunction(2)) / (t + RationalFunction(4))) == GR(Rational(1, 2)));
  CHECK(limit_at_zero(RationalFunction::zero()) == GR(0));
  CHECK_THROWS_AS(limit_at_zero(RationalFunction(1) / t), PoleAtZero);
  CHECK(limit_at_zero((t * t + t) / t) == GR(1));
}
