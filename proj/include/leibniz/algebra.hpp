#pragma once

// Algebra laws given by structure constants, mu(e_i, e_j) = sum_k a_ij^k e_k,
// and the first-order computations on them.
//
// Indices are 0-based in code and 1-based in every printed report.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/exact.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

// n x n x n structure-constant tensor. No identity is assumed at
// construction; check_leibniz is a separate predicate.
template <ExactField F>
class AlgebraLaw {
 public:
  AlgebraLaw() = default;
  explicit AlgebraLaw(std::size_t dim) : dim_(dim), c_(dim * dim * dim, F::zero()) {}

  std::size_t dim() const noexcept { return dim_; }

  const F& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
  F& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }

  // mu(e_i, e_j) as a coordinate vector.
  Vector<F> product(std::size_t i, std::size_t j) const {
    return Vector<F>(c_.begin() + index(i, j, 0), c_.begin() + index(i, j, 0) + dim_);
  }

  void set_product(std::size_t i, std::size_t j, const Vector<F>& v) {
    if (v.size() != dim_) throw DimensionMismatch("product vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = v[k];
  }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  const std::vector<F>& constants() const noexcept { return c_; }

  friend bool operator==(const AlgebraLaw& a, const AlgebraLaw& b) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("basis index out of range");
    return (i * dim_ + j) * dim_ + k;
  }

  std::size_t dim_ = 0;
  std::vector<F> c_;
};

template <ExactField F>
Vector<F> multiply(const AlgebraLaw<F>& law, const Vector<F>& x, const Vector<F>& y) {
  const std::size_t n = law.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("vector length differs from the law's dimension");
  Vector<F> out(n, F::zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const F xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const F& a = law(i, j, k);
        if (!a.is_zero()) out[k] += xy * a;
      }
    }
  }
  return out;
}

// Entrywise image under a field homomorphism (embedding, specialization).
template <ExactField To, ExactField From, class Map>
AlgebraLaw<To> map_constants(const AlgebraLaw<From>& law, Map&& map) {
  const std::size_t n = law.dim();
  AlgebraLaw<To> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = map(law(i, j, k));
  return out;
}

template <ExactField F>
AlgebraLaw<F> lift(const AlgebraLaw<GaussianRational>& law) {
  return map_constants<F>(law, [](const GaussianRational& z) { return embed<F>(z); });
}

// ---------------------------------------------------------------------------
// Leibniz identity

struct LeibnizReport {
  bool holds = true;
  // (i, j, k, m), 0-based, for every failing coordinate.
  std::vector<std::array<std::size_t, 4>> violations;
};

// a_jk^l a_il^m - a_ij^l a_lk^m + a_ik^l a_lj^m at (i, j, k, m).
template <ExactField F>
F leibniz_residual(const AlgebraLaw<F>& law, std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
  F s = F::zero();
  for (std::size_t l = 0; l < law.dim(); ++l) {
    if (const F& a = law(j, k, l); !a.is_zero()) {
      if (const F& b = law(i, l, m); !b.is_zero()) s += a * b;
    }
    if (const F& a = law(i, j, l); !a.is_zero()) {
      if (const F& b = law(l, k, m); !b.is_zero()) s -= a * b;
    }
    if (const F& a = law(i, k, l); !a.is_zero()) {
      if (const F& b = law(l, j, m); !b.is_zero()) s += a * b;
    }
  }
  return s;
}

template <ExactField F>
LeibnizReport check_leibniz(const AlgebraLaw<F>& law) {
  LeibnizReport report;
  const std::size_t n = law.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          if (!leibniz_residual(law, i, j, k, m).is_zero()) report.violations.push_back({i, j, k, m});
        }
  report.holds = report.violations.empty();
  return report;
}

// mu(x, mu(y, z)) - mu(mu(x, y), z) + mu(mu(x, z), y).
template <ExactField F>
Vector<F> leibniz_defect(const AlgebraLaw<F>& law, const Vector<F>& x, const Vector<F>& y, const Vector<F>& z) {
  Vector<F> out = multiply(law, x, multiply(law, y, z));
  Vector<F> b = multiply(law, multiply(law, x, y), z);
  Vector<F> c = multiply(law, multiply(law, x, z), y);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] - b[k] + c[k];
  return out;
}

// Anticommutativity; for a Leibniz law this is exactly the Lie condition.
template <ExactField F>
bool is_lie(const AlgebraLaw<F>& law) {
  const std::size_t n = law.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!(law(i, j, k) == -law(j, i, k))) return false;
      }
  return true;
}

// Matrix of R_x : y -> mu(y, x) acting on coordinate columns.
template <ExactField F>
Matrix<F> right_mult_matrix(const AlgebraLaw<F>& law, const Vector<F>& x) {
  const std::size_t n = law.dim();
  if (x.size() != n) throw DimensionMismatch("vector length differs from the law's dimension");
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const F& a = law(j, i, k);
        if (!a.is_zero()) m(k, j) += x[i] * a;
      }
  }
  return m;
}

// C^1 = whole space, C^{k+1} = mu(C^k, whole space), up to stabilization
// (the last entry is the stable term).
template <ExactField F>
std::vector<Subspace<F>> central_series(const AlgebraLaw<F>& law) {
  const std::size_t n = law.dim();
  std::vector<Subspace<F>> series{Subspace<F>::whole(n)};
  while (true) {
    const Subspace<F>& cur = series.back();
    std::vector<Vector<F>> span;
    for (const auto& u : cur.basis())
      for (std::size_t j = 0; j < n; ++j) span.push_back(multiply(law, u, unit_vector<F>(n, j)));
    Subspace<F> next(n, span);
    if (next == cur) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

template <ExactField F>
std::vector<std::size_t> central_series_dims(const AlgebraLaw<F>& law) {
  std::vector<std::size_t> dims;
  for (const auto& s : central_series(law)) dims.push_back(s.dim());
  return dims;
}

template <ExactField F>
bool is_nilpotent(const AlgebraLaw<F>& law) {
  return central_series(law).back().dim() == 0;
}

// Z_R = {x : mu(y, x) = 0 for all y}.
template <ExactField F>
Subspace<F> right_center(const AlgebraLaw<F>& law) {
  const std::size_t n = law.dim();
  // Row (j, k): sum_i x_i a_ji^k = 0.
  Matrix<F> sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = law(j, i, k);
  return Subspace<F>(n, null_space(sys));
}

// Joint left and right annihilator; the usual center for Lie laws.
template <ExactField F>
Subspace<F> two_sided_center(const AlgebraLaw<F>& law) {
  const std::size_t n = law.dim();
  Matrix<F> sys(2 * n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        sys(j * n + k, i) = law(j, i, k);
        sys(n * n + j * n + k, i) = law(i, j, k);
      }
  return Subspace<F>(n, null_space(sys));
}

// Dimension of Der(mu): D mu(e_i, e_j) = mu(D e_i, e_j) + mu(e_i, D e_j),
// n^3 equations in the n^2 entries of D (unknown D[p][q] at column p*n + q).
template <ExactField F>
std::size_t derivation_dim(const AlgebraLaw<F>& law) {
  const std::size_t n = law.dim();
  Matrix<F> sys(n * n * n, n * n);
  auto unknown = [n](std::size_t p, std::size_t q) { return p * n + q; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t row = (i * n + j) * n + m;
        for (std::size_t k = 0; k < n; ++k) {
          if (const F& a = law(i, j, k); !a.is_zero()) sys(row, unknown(m, k)) += a;
        }
        for (std::size_t p = 0; p < n; ++p) {
          if (const F& a = law(p, j, m); !a.is_zero()) sys(row, unknown(p, i)) -= a;
          if (const F& a = law(i, p, m); !a.is_zero()) sys(row, unknown(p, j)) -= a;
        }
      }
  return n * n - rank(sys);
}

// dim GL(n) - dim Der(mu).
template <ExactField F>
std::size_t orbit_dim(const AlgebraLaw<F>& law) {
  return law.dim() * law.dim() - derivation_dim(law);
}

// nu(x, y) = f^{-1} mu(f x, f y); columns of f are the images f(e_j).
// apply_basis_change(apply_basis_change(mu, f), g) == apply_basis_change(mu, f * g).
template <ExactField F>
AlgebraLaw<F> apply_basis_change(const AlgebraLaw<F>& law, const Matrix<F>& f, const Matrix<F>& f_inverse) {
  const std::size_t n = law.dim();
  if (f.rows() != n || f.cols() != n) throw DimensionMismatch("basis change has wrong size");
  std::vector<Vector<F>> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(f.column(j));
  AlgebraLaw<F> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, f_inverse.apply(multiply(law, images[i], images[j])));
  return out;
}

template <ExactField F>
AlgebraLaw<F> apply_basis_change(const AlgebraLaw<F>& law, const Matrix<F>& f) {
  return apply_basis_change(law, f, inverse(f));
}

// Induced law on the complement spanned by the non-pivot standard basis
// vectors of Z_R. Throws PreconditionFailed when Z_R is not a two-sided ideal.
template <ExactField F>
AlgebraLaw<F> quotient_by_right_center(const AlgebraLaw<F>& law) {
  const std::size_t n = law.dim();
  const Subspace<F> z = right_center(law);
  for (const auto& v : z.basis())
    for (std::size_t j = 0; j < n; ++j) {
      if (!z.contains(multiply(law, v, unit_vector<F>(n, j))) || !z.contains(multiply(law, unit_vector<F>(n, j), v)))
        throw PreconditionFailed("right center is not an ideal; the quotient law is ill-defined");
    }
  std::vector<bool> is_pivot(n, false);
  for (auto p : z.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) keep.push_back(c);
  }
  AlgebraLaw<F> out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      Vector<F> r = z.reduce(law.product(keep[a], keep[b]));
      for (std::size_t c = 0; c < keep.size(); ++c) out(a, b, c) = r[keep[c]];
    }
  return out;
}

}  // namespace leibniz
