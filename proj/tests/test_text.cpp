#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/text.hpp"
#include "support.hpp"

using namespace leibniz;
using testing::GR;
using testing::Law;

namespace {

void check_parse_error(std::string_view text, std::size_t line, std::size_t column, std::string_view fragment) {
  try {
    parse_algebra(text);
    FAIL("expected a parse error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_CASE("algebra files") {
  CHECK(parse_exact_algebra("dim 3\ne1*e1 = e2\ne2*e1 = e3") == make_law<GR>("mu1"));
  CHECK(parse_exact_algebra("dim 3\nparam b\ne1*e1 = e2\ne3*e3 = b*e2\ne1*e3 = e2", {{"b", GR(2)}}) ==
        make_law<GR>("mu2", {GR(2)}));
  const Law l = parse_exact_algebra(
      "# comment line\n"
      "dim 3\n"
      "\n"
      "e1*e2 = (1/2+i)*e3 - e1   # trailing comment\n"
      "e2*e2 = 2/3*e1 + e3/4 + i*e2\n"
      "e3*e3 = 0\n"
      "e3*e1 = (2^3 - 1)*e1 + 2^-1*e2\n");
  CHECK(l(0, 1, 2) == GR(Rational(1, 2), 1));
  CHECK(l(0, 1, 0) == GR(-1));
  CHECK(l(1, 1, 0) == GR(Rational(2, 3)));
  CHECK(l(1, 1, 2) == GR(Rational(1, 4)));
  CHECK(l(1, 1, 1) == GR::i());
  CHECK(l(2, 0, 0) == GR(7));
  CHECK(l(2, 0, 1) == GR(Rational(1, 2)));
  CHECK(l.product(2, 2) == Vector<GR>(3));
}

TEST_CASE("unbound parameters give a law over rational functions") {
  const ParsedLaw p = parse_algebra("dim 3\nparam b\ne1*e1 = e2\ne3*e3 = b*e2\ne1*e3 = e2");
  REQUIRE_FALSE(p.is_exact());
  CHECK(p.variable == "b");
  CHECK(p.formal()(2, 2, 1) == RationalFunction::variable());
  CHECK_THROWS_AS(p.exact(), PreconditionFailed);
  CHECK_THROWS_AS(parse_exact_algebra("dim 3\nparam b\ne3*e3 = b*e2"), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra("dim 3\nparam a\nparam b\ne3*e3 = a*b*e2"), ParseError);
  CHECK(parse_algebra("dim 3\nparam a\nparam b\ne3*e3 = a*b*e2", {{"a", GR(3)}}).formal()(2, 2, 1) ==
        RationalFunction(3) * RationalFunction::variable());
  CHECK_THROWS_AS(parse_algebra("dim 3\ne1*e1 = e2", {{"b", GR(1)}}), InvalidArgument);
}

TEST_CASE("parse errors carry positions") {
  check_parse_error("dim 2\ne1*e3 = e2", 2, 4, "out of range");
  check_parse_error("dim 2\ne1*e1 = e3", 2, 9, "out of range");
  check_parse_error("dim 3\ne1*e1 = e2\ne1*e1 = e3", 3, 1, "given twice");
  check_parse_error("dim 3\ne1*e1 = x*e2", 2, 9, "unknown name 'x'");
  check_parse_error("dim 3\ne1*e1 = e2 $", 2, 12, "unexpected character");
  check_parse_error("e1*e1 = e2", 1, 1, "dim");
  check_parse_error("dim 3\ne1+e1 = e2", 2, 3, "expected '*'");
  check_parse_error("dim 3\ne1*e1 = 2", 2, 9, "combination of basis vectors");
  check_parse_error("dim 3\ne1*e1 = e2*e3", 2, 11, "two basis vectors");
  check_parse_error("dim 3\ne1*e1 = e2/0", 2, 11, "division by zero");
  check_parse_error("dim 3\ne1*e1 = (e2", 2, 12, "expected ')'");
  check_parse_error("dim 3\nparam i", 2, 7, "reserved");
  check_parse_error("", 1, 1, "empty");
  check_parse_error("dim 0", 1, 5, "positive");
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(12);
  for (const char* name : {"mu1", "mu3", "mu5", "lambda5"}) {
    const Law l = make_law<GR>(name);
    CHECK(parse_exact_algebra(print_algebra(l)) == l);
  }
  for (int trial = 0; trial < 30; ++trial) {
    Law l(3);
    for (int k = 0; k < 6; ++k) {
      std::uniform_int_distribution<int> pick(0, 26);
      const int idx = pick(rng);
      l(idx / 9, (idx / 3) % 3, idx % 3) = testing::random_gaussian(rng);
    }
    CHECK(parse_exact_algebra(print_algebra(l)) == l);
  }
  CHECK(print_algebra(make_law<GR>("mu5")) == "dim 3\ne1*e2 = -e3\ne2*e1 = e3\n");

  const auto t = RationalFunction::variable();
  FormalLaw f(2);
  f(0, 0, 1) = (t * t + RationalFunction(1)) / t;
  f(0, 1, 0) = RationalFunction(GR(1, 1)) * t;
  f(1, 0, 0) = -t.inverse();
  const std::string text = print_algebra(f, "eps");
  const ParsedLaw back = parse_algebra(text);
  CHECK(back.variable == "eps");
  CHECK(back.formal() == f);
}

TEST_CASE("family files") {
  const ContractionFamily f =
      parse_family("dim 3\nparam t\nf(e1) = t*e1\nf(e2) = t^2*e2\nf(e3) = e3 + t*e1\n");
  CHECK(f == make_family("f"));
  CHECK(parse_family("dim 3\nf(e1) = e1 + 1/t*e2\nf(e2) = 1/t*e3\nf(e3) = e1") == make_family("f_corrected"));
  CHECK(parse_family("dim 2\nparam s\ng(e2) = s*e2\ng(e1) = e1") == ContractionFamily::diagonal({0, 1}));
  for (const auto& name : family_names()) CHECK(parse_family(print_family(make_family(name))) == make_family(name));
  CHECK_THROWS_AS(parse_family("dim 2\nf(e1) = e1"), ParseError);
  CHECK_THROWS_AS(parse_family("dim 2\nf(e1) = e1\nf(e1) = e2\nf(e2) = e2"), ParseError);
  CHECK_THROWS_AS(parse_family("dim 2\nf(e1) = e1\nf(e2) = e1"), SingularMatrix);
  CHECK_THROWS_AS(parse_family("dim 2\nf(e1) = x*e1\nf(e2) = e2"), ParseError);
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("1/2") == GR(Rational(1, 2)));
  CHECK(parse_scalar("-i") == -GR::i());
  CHECK(parse_scalar("3/4+1/2*i") == GR(Rational(3, 4), Rational(1, 2)));
  CHECK(parse_scalar(" 7 ") == GR(7));
  CHECK_THROWS_AS(parse_scalar("e1"), ParseError);
  CHECK_THROWS_AS(parse_scalar("t"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}
