#pragma once

#include <string>
#include <vector>

#include "leibniz/exact.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

// One-parameter family f_t of basis changes: an n x n matrix of rational
// functions in t whose determinant is not identically zero. Column j is
// f_t(e_j).
class ContractionFamily {
 public:
  // Throws SingularMatrix when det(f_t) == 0 as a rational function.
  explicit ContractionFamily(Matrix<RationalFunction> m);

  // f_t = diag(t^{d_1}, ..., t^{d_n}).
  static ContractionFamily diagonal(const std::vector<long>& exponents);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix<RationalFunction>& matrix() const noexcept { return m_; }
  RationalFunction determinant() const { return leibniz::determinant(m_); }

  // f evaluated at a concrete t; DivisionByZero at a pole.
  Matrix<GaussianRational> at(const GaussianRational& t) const;

  friend bool operator==(const ContractionFamily&, const ContractionFamily&) = default;

 private:
  Matrix<RationalFunction> m_;
};

// Embeds a constant matrix as a t-independent family.
ContractionFamily constant_family(const Matrix<GaussianRational>& m);

}  // namespace leibniz
