#pragma once

// Human-readable reports. Every line printed by the command-line tool comes
// from one of these functions.

#include <cstdint>
#include <string>

#include "leibniz/deform.hpp"
#include "leibniz/graph.hpp"
#include "leibniz/text.hpp"

namespace leibniz {

struct Report {
  std::string text;
  // False when the report records a failed check (Leibniz identity, missing
  // limit); the tool exits with status 1 then.
  bool ok = true;
};

template <ExactField F>
std::string format_matrix(const Matrix<F>& m, std::string_view var = "t");

Report check_report(const ParsedLaw& law);
Report invariants_report(const ParsedLaw& law, std::uint64_t seed = kDefaultSeed);
Report classify_report(const ParsedLaw& law, std::uint64_t seed = kDefaultSeed);
Report contract_report(const ExactLaw& law, const ContractionFamily& family, std::uint64_t seed = kDefaultSeed);
Report perturb_report(const ExactLaw& law, const ExactLaw& direction, std::uint64_t seed = kDefaultSeed);
std::string catalog_report();

// Plain-text certificate: source constants, family matrix, limit, target
// constants, isomorphism and the monotonicity triple.
std::string format_certificate(const ContractionCertificate& cert);
std::string format_monotonicity(const MonotonicityReport& m);

}  // namespace leibniz
