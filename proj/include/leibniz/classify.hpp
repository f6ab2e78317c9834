#pragma once

// Classification of nilpotent Leibniz laws in dimensions 2 and 3, with an
// explicit basis change certifying every label.
//
// Dimension 3 follows the case split on the characteristic sequence:
//   (3)      -> Mu1, adapted basis {x, x*x, (x*x)*x}
//   (1,1,1)  -> Mu6
//   (2,1)    -> Mu5 when the law is Lie; otherwise a characteristic vector x
//               with x*x != 0 gives the basis {x, x*x, e3}, e3 in ker R_x,
//               and the coefficients e1*e3 = a e2, e3*e3 = b e2 decide
//               Mu2(b/a^2), Mu3 or Mu4.

#include <cstdint>
#include <optional>
#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz {

enum class ClassTag { Mu1, Mu2, Mu3, Mu4, Mu5, Mu6, Nilp2Filiform, Nilp2Abelian };

std::string tag_name(ClassTag tag);

template <ExactField F>
struct ClassLabel {
  ClassTag tag = ClassTag::Mu6;
  std::optional<F> b;  // Mu2 only

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

template <ExactField F>
std::string to_string(const ClassLabel<F>& label, std::string_view var = "eps") {
  std::string out = tag_name(label.tag);
  if (label.b) out += "(" + to_string(*label.b, var) + ")";
  return out;
}

// The canonical law of a class.
template <ExactField F>
AlgebraLaw<F> representative(const ClassLabel<F>& label) {
  switch (label.tag) {
    case ClassTag::Mu1: return make_law<F>("mu1");
    case ClassTag::Mu2: return make_law<F>("mu2", {label.b.value()});
    case ClassTag::Mu3: return make_law<F>("mu3");
    case ClassTag::Mu4: return make_law<F>("mu4");
    case ClassTag::Mu5: return make_law<F>("mu5");
    case ClassTag::Mu6: return make_law<F>("mu6");
    case ClassTag::Nilp2Filiform: return null_filiform<F>(2);
    case ClassTag::Nilp2Abelian: return AlgebraLaw<F>(2);
  }
  throw InternalError("unhandled class tag");
}

template <ExactField F>
struct Classification {
  ClassLabel<F> label;
  // apply_basis_change(input, certificate) == representative(label), exactly.
  Matrix<F> certificate;
  CharacteristicSequence sequence;
  std::uint64_t seed = kDefaultSeed;
};

namespace detail {

template <ExactField F>
void require_nilpotent_leibniz(const AlgebraLaw<F>& law, std::size_t dim) {
  if (law.dim() != dim)
    throw PreconditionFailed("expected a law of dimension " + std::to_string(dim) + ", got " +
                             std::to_string(law.dim()));
  if (!check_leibniz(law).holds) throw PreconditionFailed("law does not satisfy the Leibniz identity");
  if (!is_nilpotent(law)) throw NotNilpotent("law is not nilpotent");
}

template <ExactField F>
Classification<F> certify(const AlgebraLaw<F>& law, ClassLabel<F> label, Matrix<F> basis,
                          CharacteristicSequence seq, std::uint64_t seed) {
  if (determinant(basis).is_zero()) throw InternalError("adapted basis is singular");
  if (!(apply_basis_change(law, basis) == representative(label)))
    throw InternalError("certificate verification failed for " + to_string(label));
  return {std::move(label), std::move(basis), std::move(seq), seed};
}

template <ExactField F>
bool independent(const std::vector<Vector<F>>& vs) {
  return rank(Matrix<F>::from_columns(vs)) == vs.size();
}

// Candidate order for the case-(a) vector: deterministic set, then pencils
// u + lambda v over deterministic pairs, then seeded random vectors.
template <ExactField F>
std::vector<Vector<F>> case_a_candidates(std::size_t n, std::uint64_t seed) {
  auto base = deterministic_candidates<F>(n);
  std::vector<Vector<F>> out = base;
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b)
      for (long lambda = 1; lambda <= 6; ++lambda) out.push_back(add(base[a], scale(F::from_int(lambda), base[b])));
  for (auto& v : random_candidates<F>(n, kRandomCandidates, seed ^ 0x9e3779b97f4a7c15ULL)) out.push_back(std::move(v));
  return out;
}

}  // namespace detail

// A characteristic vector: s_mu(x) equals the computed s(mu).
template <ExactField F>
Vector<F> find_characteristic_vector(const AlgebraLaw<F>& law, std::uint64_t seed = kDefaultSeed) {
  auto result = characteristic_sequence(law, seed);
  if (!(char_seq_at(law, result.witness) == result.sequence)) throw InternalError("witness does not attain s(mu)");
  return result.witness;
}

template <ExactField F>
Classification<F> classify_nilpotent_dim3(const AlgebraLaw<F>& law, std::uint64_t seed = kDefaultSeed) {
  detail::require_nilpotent_leibniz(law, 3);
  const std::size_t n = 3;
  auto cs = characteristic_sequence(law, seed);
  const auto& parts = cs.sequence.parts;

  if (parts == std::vector<std::size_t>{3}) {
    const Vector<F>& x = cs.witness;
    Vector<F> e2 = multiply(law, x, x);
    Vector<F> e3 = multiply(law, e2, x);
    return detail::certify(law, ClassLabel<F>{ClassTag::Mu1, {}}, Matrix<F>::from_columns({x, e2, e3}), cs.sequence,
                           seed);
  }
  if (parts == std::vector<std::size_t>{1, 1, 1}) {
    if (!law.is_zero()) throw SearchExhausted("sampled characteristic sequence (1,1,1) for a nonzero law");
    return detail::certify(law, ClassLabel<F>{ClassTag::Mu6, {}}, Matrix<F>::identity(n), cs.sequence, seed);
  }

  if (is_lie(law)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vector<F> p = law.product(i, j);
        if (is_zero_vector(p)) continue;
        Matrix<F> basis =
            Matrix<F>::from_columns({unit_vector<F>(n, i), unit_vector<F>(n, j), scale(-F::one(), p)});
        return detail::certify(law, ClassLabel<F>{ClassTag::Mu5, {}}, std::move(basis), cs.sequence, seed);
      }
    throw InternalError("nonzero Lie law without a nonzero bracket");
  }

  const Subspace<F> c2 = central_series(law).at(1);
  const CharacteristicSequence target{{2, 1}};
  for (const auto& x : detail::case_a_candidates<F>(n, seed)) {
    if (c2.contains(x)) continue;
    Vector<F> e2 = multiply(law, x, x);
    if (is_zero_vector(e2)) continue;
    const Matrix<F> rx = right_mult_matrix(law, x);
    if (!(jordan_type(rx) == target)) continue;

    std::optional<Vector<F>> e3;
    for (auto& v : null_space(rx)) {
      if (detail::independent<F>({x, e2, v})) {
        e3 = std::move(v);
        break;
      }
    }
    if (!e3) continue;
    const Matrix<F> basis = Matrix<F>::from_columns({x, e2, *e3});
    const AlgebraLaw<F> adapted = apply_basis_change(law, basis);
    const F a = adapted(0, 2, 1);
    const F b = adapted(2, 2, 1);
    Matrix<F> scale_e3 = Matrix<F>::identity(n);
    ClassLabel<F> label;
    if (!a.is_zero()) {
      // x3 = e3 / a turns e1*e3 into e2 and e3*e3 into (b / a^2) e2.
      scale_e3(2, 2) = a.inverse();
      label = {ClassTag::Mu2, b / (a * a)};
    } else if (!b.is_zero()) {
      auto root = try_sqrt(b);
      if (!root)
        throw NotRepresentable("class Mu3 needs sqrt(" + to_string(b) +
                               ") to normalize e3*e3 = e2; it is not in the working field");
      scale_e3(2, 2) = root->inverse();
      label = {ClassTag::Mu3, {}};
    } else {
      label = {ClassTag::Mu4, {}};
    }
    return detail::certify(law, std::move(label), basis * scale_e3, cs.sequence, seed);
  }
  throw SearchExhausted("no characteristic vector with x*x != 0 found for a non-Lie law with s = (2,1)");
}

template <ExactField F>
Classification<F> classify_nilpotent_dim2(const AlgebraLaw<F>& law, std::uint64_t seed = kDefaultSeed) {
  detail::require_nilpotent_leibniz(law, 2);
  auto seq = characteristic_sequence(law, seed).sequence;
  if (law.is_zero())
    return detail::certify(law, ClassLabel<F>{ClassTag::Nilp2Abelian, {}}, Matrix<F>::identity(2), seq, seed);
  auto candidates = deterministic_candidates<F>(2);
  for (auto& v : random_candidates<F>(2, kRandomCandidates, seed)) candidates.push_back(std::move(v));
  for (const auto& x : candidates) {
    Vector<F> sq = multiply(law, x, x);
    if (is_zero_vector(sq) || !detail::independent<F>({x, sq})) continue;
    return detail::certify(law, ClassLabel<F>{ClassTag::Nilp2Filiform, {}}, Matrix<F>::from_columns({x, sq}), seq,
                           seed);
  }
  throw SearchExhausted("no vector with x*x independent of x");
}

// Dispatches on the dimension (2 or 3).
template <ExactField F>
Classification<F> classify_nilpotent(const AlgebraLaw<F>& law, std::uint64_t seed = kDefaultSeed) {
  if (law.dim() == 2) return classify_nilpotent_dim2(law, seed);
  if (law.dim() == 3) return classify_nilpotent_dim3(law, seed);
  throw PreconditionFailed("classification is available in dimensions 2 and 3 only");
}

template <ExactField F>
struct IsomorphismResult {
  bool isomorphic = false;
  // apply_basis_change(a, *certificate) == b when isomorphic.
  std::optional<Matrix<F>> certificate;
};

template <ExactField F>
IsomorphismResult<F> are_isomorphic_dim3(const AlgebraLaw<F>& a, const AlgebraLaw<F>& b,
                                         std::uint64_t seed = kDefaultSeed) {
  auto ca = classify_nilpotent_dim3(a, seed);
  auto cb = classify_nilpotent_dim3(b, seed);
  if (!(ca.label == cb.label)) return {};
  Matrix<F> cert = ca.certificate * inverse(cb.certificate);
  if (!(apply_basis_change(a, cert) == b)) throw InternalError("composed isomorphism certificate failed");
  return {true, std::move(cert)};
}

}  // namespace leibniz

namespace leibniz {

// Isomorphism test for nilpotent Leibniz laws of dimension 2 or 3.
template <ExactField F>
IsomorphismResult<F> are_isomorphic(const AlgebraLaw<F>& a, const AlgebraLaw<F>& b,
                                    std::uint64_t seed = kDefaultSeed) {
  if (a.dim() != b.dim()) return {};
  if (a.dim() == 3) return are_isomorphic_dim3(a, b, seed);
  auto ca = classify_nilpotent(a, seed);
  auto cb = classify_nilpotent(b, seed);
  if (!(ca.label == cb.label)) return {};
  Matrix<F> cert = ca.certificate * inverse(cb.certificate);
  if (!(apply_basis_change(a, cert) == b)) throw InternalError("composed isomorphism certificate failed");
  return {true, std::move(cert)};
}

}  // namespace leibniz
