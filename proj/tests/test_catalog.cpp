#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "support.hpp"

using namespace leibniz;
using testing::GR;
using testing::Law;

TEST_CASE("catalog laws") {
  const Law m2 = make_law<GR>("mu2", {GR(5)});
  CHECK(m2(0, 0, 1) == GR(1));
  CHECK(m2(2, 2, 1) == GR(5));
  CHECK(m2(0, 2, 1) == GR(1));
  CHECK(make_law<GR>("heisenberg3") == make_law<GR>("mu5"));
  CHECK(make_law<GR>("mu6").is_zero());
  CHECK(make_law<GR>("null_filiform", {}, 4) == null_filiform<GR>(4));
  CHECK(make_law<GR>("phi1_leib2").dim() == 2);

  CHECK_THROWS_AS(make_law<GR>("mu9"), UnknownName);
  CHECK_THROWS_AS(make_law<GR>("mu2"), InvalidArgument);
  CHECK_THROWS_AS(make_law<GR>("mu1", {GR(1)}), InvalidArgument);
  CHECK_THROWS_AS(make_law<GR>("null_filiform"), InvalidArgument);
  CHECK_THROWS_AS(make_law<GR>("mu1", {}, 3), InvalidArgument);
  CHECK_THROWS_AS(null_filiform<GR>(0), InvalidArgument);

  // Every entry listed is constructible.
  for (const auto& e : law_catalog()) {
    std::vector<GR> params(e.params.size(), GR(1));
    std::optional<std::size_t> dim;
    if (e.dim == 0) dim = 5;
    const Law l = make_law<GR>(e.name, std::span<const GR>(params), dim);
    CHECK(l.dim() == (e.dim ? e.dim : 5));
  }
}

TEST_CASE("catalog families") {
  const RationalFunction t = RationalFunction::variable();
  // det(g) = t^3 by direct expansion.
  CHECK(make_family("g").determinant() == t * t * t);
  CHECK(make_family("h").determinant() == t * t * t);
  CHECK_FALSE(make_family("f").determinant().is_zero());
  CHECK_FALSE(make_family("f_corrected").determinant().is_zero());
  CHECK(make_family("f").matrix()(0, 2) == t);
  CHECK(make_family("f_corrected").matrix()(1, 0) == t.inverse());
  CHECK_THROWS_AS(make_family("k"), UnknownName);

  const Matrix<GR> g2 = make_family("g").at(GR(2));
  CHECK(g2(1, 1) == GR(4));
  CHECK_THROWS_AS(make_family("f_corrected").at(GR(0)), DivisionByZero);

  Matrix<RationalFunction> singular(2, 2);
  singular(0, 0) = t;
  CHECK_THROWS_AS(ContractionFamily{singular}, SingularMatrix);
  CHECK_THROWS_AS(ContractionFamily(Matrix<RationalFunction>(2, 3)), DimensionMismatch);
  CHECK(ContractionFamily::diagonal({1, -1}).matrix()(1, 1) == t.inverse());
}

TEST_CASE("perturbation directions") {
  CHECK(perturbation_direction<GR>("phi2")(2, 2, 1) == GR(1));
  CHECK(perturbation_direction<GR>("phi3")(0, 2, 1) == GR(1));
  CHECK(perturbation_direction<GR>("phi5")(0, 0, 0) == GR(1));
  CHECK(perturbation_direction<GR>("phi5_corrected")(0, 0, 2) == GR(1));
  CHECK_THROWS_AS(perturbation_direction<GR>("phi7"), UnknownName);
  for (const auto& name : direction_names()) CHECK(perturbation_direction<GR>(name).dim() == 3);
}
