#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/invariants.hpp"
#include "support.hpp"

using namespace leibniz;
using testing::GR;
using testing::Mat;

namespace {

Mat jordan_block_matrix(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (auto p : parts) n += p;
  Mat m(n, n);
  std::size_t offset = 0;
  for (auto p : parts) {
    for (std::size_t k = 0; k + 1 < p; ++k) m(offset + k + 1, offset + k) = GR(1);
    offset += p;
  }
  return m;
}

}  // namespace

TEST_CASE("rank, null space and determinant") {
  Mat m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = GR::i();
  CHECK(rank(m) == 2);
  CHECK(determinant(m).is_zero());
  auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero_vector(m.apply(ns[0])));
  CHECK_THROWS_AS(inverse(m), SingularMatrix);
  CHECK_THROWS_AS(inverse_by_adjugate(m), SingularMatrix);
}

TEST_CASE("inverse agrees with adjugate formula on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Mat a = testing::random_invertible(rng, n);
    const Mat inv = inverse(a);
    CHECK(a * inv == Mat::identity(n));
    CHECK(inv == inverse_by_adjugate(a));
    const Mat b = testing::random_invertible(rng, n);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("inverse over rational functions") {
  const RationalFunction t = RationalFunction::variable();
  Matrix<RationalFunction> f(2, 2);
  f(0, 0) = t;
  f(0, 1) = RationalFunction(1);
  f(1, 1) = t * t;
  const auto inv = inverse_by_adjugate(f);
  CHECK(f * inv == Matrix<RationalFunction>::identity(2));
  CHECK(inverse(f) == inv);
}

TEST_CASE("subspaces") {
  using V = Vector<GR>;
  Subspace<GR> s(3, {V{1, 1, 0}, V{2, 2, 0}, V{0, 1, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.contains(V{1, 2, 1}));
  CHECK_FALSE(s.contains(V{0, 0, 1}));
  CHECK(Subspace<GR>::whole(3).contains(s));
  CHECK(s.contains(Subspace<GR>::zero(3)));
  // Same span, different generators.
  CHECK(s == Subspace<GR>(3, {V{1, 2, 1}, V{1, 0, -1}}));
  CHECK_THROWS_AS(Subspace<GR>(3, {V{1, 2}}), DimensionMismatch);
}

TEST_CASE("jordan type of constructed nilpotent matrices") {
  // Oracle by construction: P J P^{-1} has the block sizes of J.
  CHECK(jordan_type(jordan_block_matrix({3})).parts == std::vector<std::size_t>{3});
  CHECK(jordan_type(Mat(3, 3)).parts == std::vector<std::size_t>{1, 1, 1});
  CHECK(jordan_type(jordan_block_matrix({2, 1})).parts == std::vector<std::size_t>{2, 1});

  const std::vector<std::vector<std::size_t>> partitions = {
      {1}, {2}, {1, 1}, {3}, {2, 1}, {4}, {3, 1}, {2, 2}, {2, 1, 1}, {5}, {3, 2}, {4, 1}, {2, 2, 1}, {3, 1, 1},
      {6}, {3, 3}, {4, 2}, {2, 2, 2}, {4, 1, 1}};
  std::mt19937_64 rng(17);
  for (const auto& parts : partitions) {
    const Mat j = jordan_block_matrix(parts);
    for (int trial = 0; trial < 5; ++trial) {
      const Mat p = testing::random_invertible(rng, j.rows());
      CHECK(jordan_type(p * j * inverse(p)).parts == parts);
    }
  }
  Mat not_nilpotent = Mat::identity(2);
  CHECK_THROWS_AS(jordan_type(not_nilpotent), NotNilpotent);
  CHECK_THROWS_AS(jordan_type(Mat(2, 3)), DimensionMismatch);
}
