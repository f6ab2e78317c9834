#pragma once

// Exact scalars: Gaussian rationals Q(i), univariate polynomials over Q(i)
// and rational functions Q(i)(t) in a single formal parameter.
//
// Every value is kept in canonical form, so operator== is semantic equality.

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/errors.hpp"

namespace leibniz {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
std::optional<Rational> try_sqrt(const Rational& q);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers embed implicitly
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational from_int(long v) { return {v}; }
  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

// `a/b`, `a/b*i`, `a/b+c/d*i`.
std::string to_string(const GaussianRational& z);
std::optional<GaussianRational> try_sqrt(const GaussianRational& z);

// Polynomial over Q(i) in one formal parameter, ascending coefficients with
// no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(GaussianRational c);  // NOLINT
  explicit Polynomial(std::vector<GaussianRational> coefficients);

  static Polynomial variable() { return monomial(1, 1); }
  static Polynomial monomial(const GaussianRational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<GaussianRational>& coefficients() const noexcept { return c_; }
  GaussianRational coefficient(std::size_t k) const;
  const GaussianRational& leading() const;
  // Order of vanishing at 0; the zero polynomial has none.
  std::size_t order_at_zero() const;

  Polynomial monic() const;
  GaussianRational evaluate(const GaussianRational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> try_sqrt(const Polynomial& p);
std::string to_string(const Polynomial& p, std::string_view var = "t");

// Reduced fraction num/den with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(GaussianRational::one()) {}
  RationalFunction(long v) : num_(GaussianRational(v)), den_(GaussianRational::one()) {}  // NOLINT
  RationalFunction(GaussianRational c) : num_(std::move(c)), den_(GaussianRational::one()) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(GaussianRational::one()) {}  // NOLINT
  // Normalizes; throws DivisionByZero for a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero() { return {}; }
  static RationalFunction one() { return {1L}; }
  static RationalFunction from_int(long v) { return {v}; }
  static RationalFunction variable() { return {Polynomial::variable()}; }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  GaussianRational constant_value() const;
  RationalFunction inverse() const;
  // Substitutes a value for the parameter; DivisionByZero when the
  // denominator vanishes there.
  GaussianRational evaluate(const GaussianRational& x) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

std::string to_string(const RationalFunction& r, std::string_view var = "t");
std::optional<RationalFunction> try_sqrt(const RationalFunction& r);

// ord_0(num) - ord_0(den). Throws InvalidArgument for r = 0.
long valuation_at_zero(const RationalFunction& r);
// Throws PoleAtZero when the valuation is negative.
GaussianRational limit_at_zero(const RationalFunction& r);

// The operations the algebra code needs from its scalars.
template <class F>
concept ExactField = std::regular<F> && requires(const F a, const F b, long n) {
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { F::from_int(n) } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { try_sqrt(a) } -> std::same_as<std::optional<F>>;
};

static_assert(ExactField<GaussianRational>);
static_assert(ExactField<RationalFunction>);

// Embedding of Q(i) constants in a field.
template <ExactField F>
F embed(const GaussianRational& z);

template <>
inline GaussianRational embed<GaussianRational>(const GaussianRational& z) {
  return z;
}

template <>
inline RationalFunction embed<RationalFunction>(const GaussianRational& z) {
  return RationalFunction(z);
}

inline std::string to_string(const GaussianRational& z, std::string_view) { return to_string(z); }

}  // namespace leibniz
