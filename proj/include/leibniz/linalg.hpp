#pragma once

// Dense exact linear algebra over an ExactField: matrices, row reduction,
// null spaces, inverses and canonical subspaces.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/exact.hpp"

namespace leibniz {

template <ExactField F>
using Vector = std::vector<F>;

template <ExactField F>
Vector<F> unit_vector(std::size_t n, std::size_t i) {
  Vector<F> v(n, F::zero());
  v.at(i) = F::one();
  return v;
}

template <ExactField F>
bool is_zero_vector(const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return x.is_zero(); });
}

template <ExactField F>
Vector<F> add(const Vector<F>& a, const Vector<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector<F> out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <ExactField F>
Vector<F> scale(const F& s, const Vector<F>& v) {
  Vector<F> out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

// Row-major dense matrix.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  // Columns given as vectors: column j is f(e_j).
  static Matrix from_columns(const std::vector<Vector<F>>& columns) {
    const std::size_t n = columns.empty() ? 0 : columns.front().size();
    Matrix m(n, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != n) throw DimensionMismatch("columns of unequal length");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<F> column(std::size_t c) const {
    Vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector<F> row(std::size_t r) const { return Vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return x.is_zero(); });
  }

  Vector<F> apply(const Vector<F>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector<F> out(rows_, F::zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const F& a = (*this)(r, c);
        if (a.is_zero() || v[c].is_zero()) continue;
        out[r] += a * v[c];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <ExactField F>
Matrix<F> power(const Matrix<F>& m, std::size_t k) {
  Matrix<F> out = Matrix<F>::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

template <ExactField F>
struct RowEchelon {
  Matrix<F> reduced;                // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

template <ExactField F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const F inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

// Basis of {x : m x = 0}, one vector per free column, in canonical form.
template <ExactField F>
std::vector<Vector<F>> null_space(const Matrix<F>& m) {
  RowEchelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), F::zero());
    v[free] = F::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  F det = F::one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F::zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const F inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const F factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

// Classical adjugate: adj(m) * m = det(m) * I.
template <ExactField F>
Matrix<F> adjugate(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> adj(n, n);
  if (n == 1) {
    adj(0, 0) = F::one();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<F> minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      F cof = determinant(std::move(minor));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

// Gauss-Jordan inverse. Throws SingularMatrix.
template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F::one();
  }
  RowEchelon<F> e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

// Inverse through adj(m) / det(m).
template <ExactField F>
Matrix<F> inverse_by_adjugate(const Matrix<F>& m) {
  F det = determinant(m);
  if (det.is_zero()) throw SingularMatrix("matrix is singular");
  Matrix<F> adj = adjugate(m);
  const F inv = det.inverse();
  for (std::size_t i = 0; i < adj.rows(); ++i) {
    for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) *= inv;
  }
  return adj;
}

// Subspace of F^n stored by its reduced row-echelon basis; equal subspaces
// have identical bases.
template <ExactField F>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vector<F>>& spanning) : ambient_(ambient) {
    Matrix<F> m(spanning.size(), ambient);
    for (std::size_t r = 0; r < spanning.size(); ++r) {
      if (spanning[r].size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
      for (std::size_t c = 0; c < ambient; ++c) m(r, c) = spanning[r][c];
    }
    RowEchelon<F> e = row_reduce(std::move(m));
    pivots_ = e.pivots;
    for (std::size_t r = 0; r < e.rank(); ++r) basis_.push_back(e.reduced.row(r));
  }

  static Subspace whole(std::size_t n) {
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vector<F>(n, i));
    return Subspace(n, vs);
  }
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector<F>>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // v minus its component along the basis, read off at the pivot columns.
  // Zero exactly when v lies in the subspace.
  Vector<F> reduce(const Vector<F>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector has wrong length");
    Vector<F> out(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const F c = out[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (!basis_[r][j].is_zero()) out[j] -= c * basis_[r][j];
      }
    }
    return out;
  }

  bool contains(const Vector<F>& v) const { return is_zero_vector(reduce(v)); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vector<F>& v) { return contains(v); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace leibniz
