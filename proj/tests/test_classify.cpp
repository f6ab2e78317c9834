#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/classify.hpp"
#include "leibniz/deform.hpp"
#include "support.hpp"

using namespace leibniz;
using testing::GR;
using testing::Law;
using testing::Mat;
using testing::mu;
using testing::mu2;

namespace {

ClassLabel<GR> label(ClassTag tag) { return {tag, std::nullopt}; }
ClassLabel<GR> mu2_label(const GR& b) { return {ClassTag::Mu2, b}; }

// b from the invariant 4b - 1 = det(S) / pf(A)^2 of the form read off on
// span{e1, e3} along e2 (oracle formula from tests/oracle/oracle.py).
GR mu2_invariant(const Law& l) {
  const GR b11 = l(0, 0, 1), b13 = l(0, 2, 1), b31 = l(2, 0, 1), b33 = l(2, 2, 1);
  const GR half(Rational(1, 2));
  const GR s12 = half * (b13 + b31);
  const GR a12 = half * (b13 - b31);
  return (((b11 * b33 - s12 * s12) / (a12 * a12)) + GR(1)) / GR(4);
}

}  // namespace

TEST_CASE("representatives classify to themselves with identity-free certificates") {
  CHECK(classify_nilpotent(mu("mu1")).label == label(ClassTag::Mu1));
  CHECK(classify_nilpotent(mu("mu3")).label == label(ClassTag::Mu3));
  CHECK(classify_nilpotent(mu("mu4")).label == label(ClassTag::Mu4));
  CHECK(classify_nilpotent(mu("mu5")).label == label(ClassTag::Mu5));
  CHECK(classify_nilpotent(mu("mu6")).label == label(ClassTag::Mu6));
  CHECK(classify_nilpotent(mu2(GR(0))).label == mu2_label(GR(0)));
  CHECK(classify_nilpotent(mu2(GR(3))).label == mu2_label(GR(3)));
  CHECK(classify_nilpotent(mu2(GR(1, 2))).label == mu2_label(GR(1, 2)));
  for (const char* name : {"mu1", "mu3", "mu4", "mu5", "mu6", "lambda5"}) {
    const auto c = classify_nilpotent(mu(name));
    CHECK(apply_basis_change(mu(name), c.certificate) == representative(c.label));
  }
  CHECK(to_string(mu2_label(GR(Rational(1, 4)))) == "Mu2(1/4)");
  CHECK(to_string(label(ClassTag::Mu3)) == "Mu3");
}

TEST_CASE("lambda5 is Mu3") {
  const auto c = classify_nilpotent(make_law<GR>("lambda5"));
  CHECK(c.label == label(ClassTag::Mu3));
  CHECK(apply_basis_change(make_law<GR>("lambda5"), c.certificate) == mu("mu3"));
}

TEST_CASE("random conjugates classify back, with b recovered exactly") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"mu1", "mu3", "mu4", "mu5", "mu6"}) {
    const auto expected = classify_nilpotent(mu(name)).label;
    for (int trial = 0; trial < 15; ++trial) {
      const Law c = apply_basis_change(mu(name), testing::random_invertible(rng, 3));
      CHECK_MESSAGE(classify_nilpotent(c).label == expected, name);
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    const GR b = testing::random_rational(rng);
    const Law c = apply_basis_change(mu2(b), testing::random_invertible(rng, 3));
    CHECK(classify_nilpotent(c).label == mu2_label(b));
  }
  // mu2_3 in particular.
  const Law c3 = apply_basis_change(mu2(GR(3)), testing::random_invertible(rng, 3));
  CHECK(classify_nilpotent(c3).label == mu2_label(GR(3)));
}

TEST_CASE("the Mu2 parameter matches the invariant formula") {
  for (long b : {0L, 1L, 3L, -2L}) CHECK(mu2_invariant(mu2(GR(b))) == GR(b));
  // Law e1*e1 = e2, e1*e3 = a e2, e3*e3 = c e2 has b = c / a^2.
  Law l(3);
  l(0, 0, 1) = 1;
  l(0, 2, 1) = 3;
  l(2, 2, 1) = 5;
  CHECK(classify_nilpotent(l).label == mu2_label(GR(Rational(5, 9))));
  CHECK(mu2_invariant(l) == GR(Rational(5, 9)));
}

TEST_CASE("Mu3 needs a square root from the field") {
  Law l(3);
  l(0, 0, 1) = 1;
  l(2, 2, 1) = 2;  // e3*e3 = 2 e2: normalizing needs sqrt(2)
  CHECK_THROWS_AS(classify_nilpotent(l), NotRepresentable);
  l(2, 2, 1) = -4;  // sqrt(-4) = 2i is fine
  CHECK(classify_nilpotent(l).label == label(ClassTag::Mu3));
}

TEST_CASE("preconditions") {
  Law idem(3);
  idem(0, 0, 0) = 1;
  CHECK_THROWS_AS(classify_nilpotent(idem), PreconditionFailed);
  CHECK_THROWS_AS(classify_nilpotent(null_filiform<GR>(4)), PreconditionFailed);
  CHECK_THROWS_AS(classify_nilpotent(make_law<GR>("phi2_leib2")), NotNilpotent);
  CHECK_THROWS_AS(classify_nilpotent_dim3(null_filiform<GR>(2)), PreconditionFailed);
}

TEST_CASE("dimension 2") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Law c = apply_basis_change(null_filiform<GR>(2), testing::random_invertible(rng, 2));
    CHECK(classify_nilpotent_dim2(c).label == label(ClassTag::Nilp2Filiform));
  }
  CHECK(classify_nilpotent_dim2(Law(2)).label == label(ClassTag::Nilp2Abelian));
  CHECK_FALSE(are_isomorphic(null_filiform<GR>(2), Law(2)).isomorphic);
}

TEST_CASE("isomorphism test") {
  std::mt19937_64 rng(8);
  const Law a = apply_basis_change(mu("mu3"), testing::random_invertible(rng, 3));
  const Law b = apply_basis_change(mu("mu3"), testing::random_invertible(rng, 3));
  auto r = are_isomorphic(a, b);
  REQUIRE(r.isomorphic);
  CHECK(apply_basis_change(a, *r.certificate) == b);
  CHECK_FALSE(are_isomorphic(mu("mu3"), mu2(GR(1))).isomorphic);
  CHECK_FALSE(are_isomorphic(mu2(GR(1)), mu2(GR(2))).isomorphic);
  CHECK_FALSE(are_isomorphic(mu("mu3"), null_filiform<GR>(2)).isomorphic);
}

TEST_CASE("classification over Q(i)(eps)") {
  const auto eps = RationalFunction::variable();
  auto classify_perturbed = [](const char* base, const char* dir, const GR& b) {
    const Law l = b.is_zero() && std::string(base) == "mu2" ? mu2(GR(0)) : mu(base);
    return classify_nilpotent(perturb(l, perturbation_direction<GR>(dir))).label;
  };
  // b' values from the oracle's invariant formula.
  CHECK(classify_perturbed("mu2", "phi2", GR(0)) == ClassLabel<RationalFunction>{ClassTag::Mu2, eps});
  CHECK(classify_perturbed("mu3", "phi3", GR(1)) ==
        ClassLabel<RationalFunction>{ClassTag::Mu2, (eps * eps).inverse()});
  CHECK(classify_perturbed("mu4", "phi4", GR(1)) == ClassLabel<RationalFunction>{ClassTag::Mu2, eps.inverse()});
  CHECK(classify_perturbed("mu5", "phi5_corrected", GR(1)) ==
        ClassLabel<RationalFunction>{ClassTag::Mu2, RationalFunction(GR(Rational(1, 4)))});
  CHECK_THROWS_AS(classify_nilpotent(perturb(mu("mu5"), perturbation_direction<GR>("phi5"))), PreconditionFailed);
}
