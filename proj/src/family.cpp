#include "leibniz/family.hpp"

#include <utility>

namespace leibniz {

ContractionFamily::ContractionFamily(Matrix<RationalFunction> m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionMismatch("contraction family must be square");
  if (leibniz::determinant(m_).is_zero()) throw SingularMatrix("family is singular for every t");
}

ContractionFamily ContractionFamily::diagonal(const std::vector<long>& exponents) {
  const std::size_t n = exponents.size();
  Matrix<RationalFunction> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const long d = exponents[i];
    Polynomial mono = Polynomial::monomial(GaussianRational::one(), static_cast<std::size_t>(d < 0 ? -d : d));
    m(i, i) = d >= 0 ? RationalFunction(mono) : RationalFunction(Polynomial(GaussianRational::one()), mono);
  }
  return ContractionFamily(std::move(m));
}

Matrix<GaussianRational> ContractionFamily::at(const GaussianRational& t) const {
  Matrix<GaussianRational> out(m_.rows(), m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) out(i, j) = m_(i, j).evaluate(t);
  return out;
}

ContractionFamily constant_family(const Matrix<GaussianRational>& m) {
  Matrix<RationalFunction> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(m(i, j));
  return ContractionFamily(std::move(out));
}

}  // namespace leibniz
