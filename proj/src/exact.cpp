#include "leibniz/exact.hpp"

#include <algorithm>
#include <utility>

namespace leibniz {

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> try_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  const int si = sgn(z.im());
  if (si == 0) return to_string(z.re());
  std::string imag;
  Rational a = abs(z.im());
  imag = (a == 1) ? "i" : to_string(a) + "*i";
  if (sgn(z.re()) == 0) return si < 0 ? "-" + imag : imag;
  return to_string(z.re()) + (si < 0 ? "-" : "+") + imag;
}

std::optional<GaussianRational> try_sqrt(const GaussianRational& z) {
  if (sgn(z.im()) == 0) {
    if (sgn(z.re()) >= 0) {
      if (auto r = try_sqrt(z.re())) return GaussianRational(*r);
      return std::nullopt;
    }
    if (auto r = try_sqrt(Rational(-z.re()))) return GaussianRational(0, *r);
    return std::nullopt;
  }
  // (p + q i)^2 = z  <=>  p^2 = (a + |z|)/2, q = b / (2p).
  auto modulus = try_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto p = try_sqrt(Rational((z.re() + *modulus) / 2));
  if (!p || sgn(*p) == 0) return std::nullopt;
  GaussianRational root(*p, Rational(z.im() / (2 * *p)));
  if (!(root * root == z)) return std::nullopt;
  return root;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(GaussianRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const GaussianRational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Polynomial::coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }

const GaussianRational& Polynomial::leading() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return c_.back();
}

std::size_t Polynomial::order_at_zero() const {
  if (c_.empty()) throw InvalidArgument("order at zero of the zero polynomial");
  std::size_t k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  if (c_.back().is_one()) return *this;
  GaussianRational inv = c_.back().inverse();
  Polynomial out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

GaussianRational Polynomial::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<GaussianRational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {Polynomial(), a};
  std::vector<GaussianRational> q(r.size() - db);
  GaussianRational inv = bc.back().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    GaussianRational c = r[k] * inv;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * bc[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::optional<Polynomial> try_sqrt(const Polynomial& p) {
  if (p.is_zero()) return Polynomial();
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lead = try_sqrt(p.leading());
  if (!lead) return std::nullopt;
  const auto m = static_cast<std::size_t>(p.degree() / 2);
  Polynomial root = Polynomial::monomial(*lead, m);
  const GaussianRational twice_lead = *lead * GaussianRational(2);
  for (std::size_t k = m; k-- > 0;) {
    Polynomial residual = p - root * root;
    GaussianRational c = residual.coefficient(m + k) / twice_lead;
    root += Polynomial::monomial(c, k);
  }
  if (!(root * root == p)) return std::nullopt;
  return root;
}

namespace {

bool is_real(const GaussianRational& z) { return sgn(z.im()) == 0; }

std::string power_of(std::string_view var, std::size_t k) {
  if (k == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(k);
}

}  // namespace

std::string to_string(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    GaussianRational coef = c[k];
    bool negative = false;
    if (is_real(coef) && sgn(coef.re()) < 0) {
      negative = true;
      coef = -coef;
    }
    std::string body;
    if (k == 0) {
      body = is_real(coef) || sgn(coef.re()) == 0 ? to_string(coef) : "(" + to_string(coef) + ")";
    } else if (coef.is_one()) {
      body = power_of(var, k);
    } else if (is_real(coef) || sgn(coef.re()) == 0) {
      body = to_string(coef) + "*" + power_of(var, k);
    } else {
      body = "(" + to_string(coef) + ")*" + power_of(var, k);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = Polynomial(GaussianRational::one());
    return;
  }
  if (den.degree() > 0) {
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).quotient;
      den = divmod(den, g).quotient;
    }
  }
  GaussianRational lead = den.leading();
  if (!lead.is_one()) {
    GaussianRational inv = lead.inverse();
    num = num * Polynomial(inv);
    den = den * Polynomial(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

GaussianRational RationalFunction::constant_value() const {
  if (!is_constant()) throw InvalidArgument("rational function is not constant");
  return num_.coefficient(0);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {den_, num_};
}

GaussianRational RationalFunction::evaluate(const GaussianRational& x) const {
  GaussianRational d = den_.evaluate(x);
  if (d.is_zero()) throw DivisionByZero();
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

std::string to_string(const RationalFunction& r, std::string_view var) {
  if (r.den().degree() == 0) return to_string(r.num(), var);
  // Multi-term sides are parenthesized; the denominator is monic, so a single
  // term there is a bare power of the variable.
  auto side = [&](const Polynomial& p) {
    std::string s = to_string(p, var);
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return side(r.num()) + "/" + side(r.den());
}

std::optional<RationalFunction> try_sqrt(const RationalFunction& r) {
  auto n = try_sqrt(r.num());
  if (!n) return std::nullopt;
  auto d = try_sqrt(r.den());
  if (!d) return std::nullopt;
  return RationalFunction(*n, *d);
}

long valuation_at_zero(const RationalFunction& r) {
  if (r.is_zero()) throw InvalidArgument("valuation of zero undefined");
  return static_cast<long>(r.num().order_at_zero()) - static_cast<long>(r.den().order_at_zero());
}

GaussianRational limit_at_zero(const RationalFunction& r) {
  if (r.is_zero()) return {};
  const long v = valuation_at_zero(r);
  if (v > 0) return {};
  if (v < 0) throw PoleAtZero("pole of order " + std::to_string(-v) + " at zero");
  // Reduced fraction with v = 0: neither side vanishes at 0.
  return r.num().coefficient(0) / r.den().coefficient(0);
}

}  // namespace leibniz
