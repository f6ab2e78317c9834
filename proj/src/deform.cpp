#include "leibniz/deform.hpp"

#include <utility>

namespace leibniz {

namespace {

std::string constant_name(std::size_t i, std::size_t j, std::size_t k) {
  return "a_{" + std::to_string(i + 1) + std::to_string(j + 1) + "}^" + std::to_string(k + 1);
}

Matrix<RationalFunction> lift_matrix(const Matrix<GaussianRational>& m) {
  Matrix<RationalFunction> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = RationalFunction(m(r, c));
  return out;
}

// Isomorphism from `result` onto `target`, by classification when the
// dimension allows it and by exact equality otherwise.
std::optional<std::optional<Matrix<GaussianRational>>> match(const ExactLaw& result, const ExactLaw& target,
                                                             std::uint64_t seed) {
  if (result == target) return std::optional<Matrix<GaussianRational>>{};
  const std::size_t n = result.dim();
  if ((n == 2 || n == 3) && is_nilpotent(result) && is_nilpotent(target) && check_leibniz(target).holds) {
    auto iso = are_isomorphic(result, target, seed);
    if (iso.isomorphic) return iso.certificate;
  }
  return std::nullopt;
}

}  // namespace

FormalLaw contraction_path(const ExactLaw& law, const ContractionFamily& family) {
  if (law.dim() != family.dim()) throw DimensionMismatch("family and law dimensions differ");
  const FormalLaw lifted = lift<RationalFunction>(law);
  const Matrix<RationalFunction> finv = inverse_by_adjugate(family.matrix());
  return apply_basis_change(lifted, family.matrix(), finv);
}

ExactLaw contract(const ExactLaw& law, const ContractionFamily& family) {
  const FormalLaw path = contraction_path(law, family);
  const std::size_t n = law.dim();
  ExactLaw out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const RationalFunction& c = path(i, j, k);
        if (c.is_zero()) continue;
        if (valuation_at_zero(c) < 0)
          throw PoleAtZero("no limit at t = 0: " + constant_name(i, j, k) + " = " + to_string(c, "t"));
        out(i, j, k) = limit_at_zero(c);
      }
  if (check_leibniz(law).holds && !check_leibniz(out).holds)
    throw InternalError("limit of Leibniz laws fails the Leibniz identity");
  return out;
}

FormalLaw perturb(const ExactLaw& law, const ExactLaw& direction) {
  if (law.dim() != direction.dim()) throw DimensionMismatch("law and direction dimensions differ");
  const std::size_t n = law.dim();
  const RationalFunction eps = RationalFunction::variable();
  FormalLaw out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out(i, j, k) = RationalFunction(law(i, j, k)) + eps * RationalFunction(direction(i, j, k));
  return out;
}

ExactLaw specialize(const FormalLaw& law, const GaussianRational& value) {
  return map_constants<GaussianRational>(law, [&](const RationalFunction& r) { return r.evaluate(value); });
}

bool verify(const ContractionCertificate& cert) {
  try {
    if (!(contract(cert.source, cert.family) == cert.result)) return false;
    if (cert.isomorphism) {
      if (determinant(*cert.isomorphism).is_zero()) return false;
      if (!(apply_basis_change(cert.result, *cert.isomorphism) == cert.target)) return false;
    } else if (!(cert.result == cert.target)) {
      return false;
    }
    return check_contraction_monotonicity(cert.source, cert.target, cert.seed) == cert.monotonicity;
  } catch (const Error&) {
    return false;
  }
}

std::optional<ContractionCertificate> certify_contraction(const ExactLaw& source, const ContractionFamily& family,
                                                          const ExactLaw& target, std::uint64_t seed) {
  if (source.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  ExactLaw result;
  try {
    result = contract(source, family);
  } catch (const PoleAtZero&) {
    return std::nullopt;
  }
  auto iso = match(result, target, seed);
  if (!iso) return std::nullopt;
  return ContractionCertificate{"",
                                "",
                                source,
                                family,
                                std::move(result),
                                target,
                                std::move(*iso),
                                check_contraction_monotonicity(source, target, seed),
                                seed};
}

std::optional<ContractionCertificate> find_diagonal_contraction(const ExactLaw& source, const ExactLaw& target,
                                                                const DiagonalSearchOptions& options) {
  const std::size_t n = source.dim();
  if (target.dim() != n) throw DimensionMismatch("source and target dimensions differ");
  if (options.exponent_bound < 0) throw InvalidArgument("exponent bound must be non-negative");

  std::optional<InvariantFingerprint<GaussianRational>> source_fp;
  if (options.nontrivial_only) {
    if (!check_contraction_monotonicity(source, target, options.seed).passes()) return std::nullopt;
    source_fp = fingerprint(source, options.seed);
  }

  std::vector<Matrix<GaussianRational>> changes{Matrix<GaussianRational>::identity(n)};
  for (const auto& m : options.pre_changes) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("pre-change has wrong size");
    if (determinant(m).is_zero()) throw SingularMatrix("pre-change is singular");
    changes.push_back(m);
  }

  const long bound = options.exponent_bound;
  for (const auto& p : changes)
    for (const auto& q : changes) {
      const Matrix<RationalFunction> lp = lift_matrix(p);
      const Matrix<RationalFunction> lq = lift_matrix(q);
      std::vector<long> d(n, -bound);
      while (true) {
        ContractionFamily family(lp * ContractionFamily::diagonal(d).matrix() * lq);
        try {
          ExactLaw result = contract(source, family);
          if (!(source_fp && fingerprint(result, options.seed) == *source_fp)) {
            if (auto iso = match(result, target, options.seed)) {
              return ContractionCertificate{"",
                                            "",
                                            source,
                                            std::move(family),
                                            std::move(result),
                                            target,
                                            std::move(*iso),
                                            check_contraction_monotonicity(source, target, options.seed),
                                            options.seed};
            }
          }
        } catch (const PoleAtZero&) {
        }
        std::size_t pos = n;
        while (pos > 0 && d[pos - 1] == bound) d[--pos] = -bound;
        if (pos == 0) break;
        ++d[pos - 1];
      }
    }
  return std::nullopt;
}

}  // namespace leibniz
