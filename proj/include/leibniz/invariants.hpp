#pragma once

// Jordan type of nilpotent operators, the characteristic sequence s(mu) and
// the invariant fingerprint used to tell laws apart.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

inline constexpr std::uint64_t kDefaultSeed = 20070617;
inline constexpr std::size_t kRandomCandidates = 32;

// Non-increasing block sizes; ordered lexicographically.
struct CharacteristicSequence {
  std::vector<std::size_t> parts;

  std::size_t total() const {
    std::size_t s = 0;
    for (auto p : parts) s += p;
    return s;
  }
  friend auto operator<=>(const CharacteristicSequence&, const CharacteristicSequence&) = default;
};

std::string to_string(const CharacteristicSequence& s);

// Number of blocks of size >= k is rank(m^{k-1}) - rank(m^k).
template <ExactField F>
CharacteristicSequence jordan_type(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("jordan_type needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n};
  Matrix<F> p = Matrix<F>::identity(n);
  while (ranks.back() > 0) {
    p = p * m;
    const std::size_t r = rank(p);
    if (r == ranks.back()) throw NotNilpotent("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[k-1] = number of blocks of size >= k
  CharacteristicSequence seq;
  const std::size_t longest = ranks.size() - 1;
  for (std::size_t k = longest; k >= 1; --k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t longer = k < longest ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t b = 0; b < at_least - longer; ++b) seq.parts.push_back(k);
  }
  return seq;
}

// s_mu(x) for x outside C^2.
template <ExactField F>
CharacteristicSequence char_seq_at(const AlgebraLaw<F>& law, const Vector<F>& x) {
  auto series = central_series(law);
  if (series.back().dim() != 0) throw NotNilpotent("law is not nilpotent");
  if (series.size() > 1 && series[1].contains(x)) throw InvalidArgument("vector lies in C^2");
  return jordan_type(right_mult_matrix(law, x));
}

// Deterministic candidates e_i, then e_i + e_j (i < j).
template <ExactField F>
std::vector<Vector<F>> deterministic_candidates(std::size_t n) {
  std::vector<Vector<F>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector<F>(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<F> v = unit_vector<F>(n, i);
      v[j] = F::one();
      out.push_back(std::move(v));
    }
  return out;
}

// Vectors with integer entries in [-3, 3], reproducible from the seed.
template <ExactField F>
std::vector<Vector<F>> random_candidates(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::vector<Vector<F>> out;
  for (std::size_t c = 0; c < count; ++c) {
    Vector<F> v(n);
    for (auto& x : v) x = F::from_int(coord(rng));
    out.push_back(std::move(v));
  }
  return out;
}

template <ExactField F>
struct CharacteristicResult {
  CharacteristicSequence sequence;
  Vector<F> witness;  // a characteristic vector
  std::uint64_t seed = kDefaultSeed;
};

// Lexicographic maximum of s_mu(x) over the deterministic candidates outside
// C^2 plus kRandomCandidates seeded random vectors. The witness certifies the
// lower bound; the first maximizing candidate wins ties.
template <ExactField F>
CharacteristicResult<F> characteristic_sequence(const AlgebraLaw<F>& law, std::uint64_t seed = kDefaultSeed) {
  const std::size_t n = law.dim();
  auto series = central_series(law);
  if (series.back().dim() != 0) throw NotNilpotent("law is not nilpotent");
  const Subspace<F> c2 = series.size() > 1 ? series[1] : Subspace<F>::zero(n);
  auto candidates = deterministic_candidates<F>(n);
  for (auto& v : random_candidates<F>(n, kRandomCandidates, seed)) candidates.push_back(std::move(v));

  std::optional<CharacteristicResult<F>> best;
  for (const auto& x : candidates) {
    if (c2.contains(x)) continue;
    CharacteristicSequence s = jordan_type(right_mult_matrix(law, x));
    if (!best || s > best->sequence) {
      best = CharacteristicResult<F>{std::move(s), x, seed};
      if (best->sequence.parts.size() == 1) break;  // (n) is the global maximum
    }
  }
  if (!best) throw SearchExhausted("no candidate vector outside C^2");
  return *best;
}

template <ExactField F>
struct InvariantFingerprint {
  std::size_t dim = 0;
  bool is_lie = false;
  std::vector<std::size_t> central_dims;
  std::size_t right_center_dim = 0;
  std::size_t two_sided_center_dim = 0;
  std::optional<CharacteristicSequence> char_seq;  // nilpotent laws only
  std::size_t derivation_dim = 0;

  std::size_t orbit_dim() const { return dim * dim - derivation_dim; }
  friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

template <ExactField F>
InvariantFingerprint<F> fingerprint(const AlgebraLaw<F>& law, std::uint64_t seed = kDefaultSeed) {
  if (!check_leibniz(law).holds) throw PreconditionFailed("law does not satisfy the Leibniz identity");
  InvariantFingerprint<F> fp;
  fp.dim = law.dim();
  fp.is_lie = is_lie(law);
  fp.central_dims = central_series_dims(law);
  fp.right_center_dim = right_center(law).dim();
  fp.two_sided_center_dim = two_sided_center(law).dim();
  if (fp.central_dims.back() == 0 && law.dim() > 0) fp.char_seq = characteristic_sequence(law, seed).sequence;
  fp.derivation_dim = derivation_dim(law);
  return fp;
}

}  // namespace leibniz
