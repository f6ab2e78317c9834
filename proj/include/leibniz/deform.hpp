#pragma once

// Contractions mu' = lim_{t->0} f_t^{-1} mu(f_t x, f_t y) taken exactly over
// Q(i)(t), perturbations mu + eps phi over Q(i)(eps), the monotonicity
// checks a nontrivial contraction must satisfy, and a bounded search for
// contraction witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/classify.hpp"
#include "leibniz/family.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz {

using ExactLaw = AlgebraLaw<GaussianRational>;
using FormalLaw = AlgebraLaw<RationalFunction>;

// Three inequalities for a nontrivial contraction source -> target:
// orbit dimension drops strictly, dim Z_R does not drop, and s does not
// increase (compared only when both laws are nilpotent).
struct MonotonicityReport {
  std::size_t source_orbit_dim = 0;
  std::size_t target_orbit_dim = 0;
  std::size_t source_right_center_dim = 0;
  std::size_t target_right_center_dim = 0;
  std::optional<CharacteristicSequence> source_sequence;
  std::optional<CharacteristicSequence> target_sequence;
  bool orbit_ok = false;
  bool right_center_ok = false;
  bool sequence_ok = false;

  bool passes() const noexcept { return orbit_ok && right_center_ok && sequence_ok; }
  friend bool operator==(const MonotonicityReport&, const MonotonicityReport&) = default;
};

template <ExactField F>
MonotonicityReport check_contraction_monotonicity(const AlgebraLaw<F>& source, const AlgebraLaw<F>& target,
                                                  std::uint64_t seed = kDefaultSeed) {
  if (source.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  MonotonicityReport r;
  r.source_orbit_dim = orbit_dim(source);
  r.target_orbit_dim = orbit_dim(target);
  r.source_right_center_dim = right_center(source).dim();
  r.target_right_center_dim = right_center(target).dim();
  r.orbit_ok = r.source_orbit_dim > r.target_orbit_dim;
  r.right_center_ok = r.source_right_center_dim <= r.target_right_center_dim;
  r.sequence_ok = true;
  if (is_nilpotent(source) && is_nilpotent(target)) {
    r.source_sequence = characteristic_sequence(source, seed).sequence;
    r.target_sequence = characteristic_sequence(target, seed).sequence;
    r.sequence_ok = *r.source_sequence >= *r.target_sequence;
  }
  return r;
}

// The intermediate laws mu_t = f_t^{-1} mu(f_t x, f_t y) as rational
// functions of t; f_t^{-1} is formed as adj(f_t) / det(f_t).
FormalLaw contraction_path(const ExactLaw& law, const ContractionFamily& family);

// Entrywise limit at t = 0 of contraction_path. Throws PoleAtZero naming the
// first structure constant without a limit. The result is checked against
// the Leibniz identity when the source satisfies it.
ExactLaw contract(const ExactLaw& law, const ContractionFamily& family);

// mu + eps * phi with eps a formal transcendental.
FormalLaw perturb(const ExactLaw& law, const ExactLaw& direction);

// Substitutes a value for the formal parameter. Throws DivisionByZero when a
// constant has a pole there.
ExactLaw specialize(const FormalLaw& law, const GaussianRational& value);

struct ContractionCertificate {
  std::string source_name;
  std::string target_name;
  ExactLaw source;
  ContractionFamily family;
  ExactLaw result;  // contract(source, family)
  ExactLaw target;
  // apply_basis_change(result, isomorphism) == target. Absent when the
  // result matches the target's constants exactly.
  std::optional<Matrix<GaussianRational>> isomorphism;
  MonotonicityReport monotonicity;
  std::uint64_t seed = kDefaultSeed;
};

// Recomputes the contraction, the isomorphism and the monotonicity report.
bool verify(const ContractionCertificate& cert);

// Contracts `source` by `family` and certifies the result against `target`:
// classification in dimensions 2 and 3, exact constant equality after
// matching fingerprints otherwise. nullopt when the limit does not exist or
// is not isomorphic to the target.
std::optional<ContractionCertificate> certify_contraction(const ExactLaw& source, const ContractionFamily& family,
                                                          const ExactLaw& target, std::uint64_t seed = kDefaultSeed);

struct DiagonalSearchOptions {
  long exponent_bound = 2;
  std::vector<Matrix<GaussianRational>> pre_changes;  // identity is always tried first
  bool nontrivial_only = true;
  std::uint64_t seed = kDefaultSeed;
};

// Searches f_t = P diag(t^d_1, ..., t^d_n) Q with |d_i| <= bound and P, Q
// from {I} + pre_changes, in the order (P, Q, d lexicographic). Returns the
// first family whose contraction is isomorphic to `target`. With
// nontrivial_only, pairs refuted by the monotonicity check are rejected up
// front and contractions with the source's fingerprint are skipped.
std::optional<ContractionCertificate> find_diagonal_contraction(const ExactLaw& source, const ExactLaw& target,
                                                                const DiagonalSearchOptions& options = {});

}  // namespace leibniz
