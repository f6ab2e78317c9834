#pragma once

// Plain-text formats for laws and contraction families.
//
// Algebra file:
//   dim 3
//   param b                 # optional, one line per parameter
//   e1*e1 = e2
//   e3*e3 = b*e2
//   e1*e3 = (1/2+i)*e2 - e3
// Products not written are zero. Coefficients are expressions built from
// rationals, i, declared parameters, + - * / ^ and parentheses.
//
// Family file:
//   dim 3
//   param t                 # optional, t is the default name
//   f(e1) = t*e1
//   f(e2) = t^2*e2
//   f(e3) = e3 + t*e1
// Every column must be given.

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "leibniz/algebra.hpp"
#include "leibniz/family.hpp"

namespace leibniz {

using ExactLaw = AlgebraLaw<GaussianRational>;
using FormalLaw = AlgebraLaw<RationalFunction>;

// A parsed law: exact when every parameter is bound, otherwise over the
// rational functions in the single free parameter `variable`.
struct ParsedLaw {
  std::variant<ExactLaw, FormalLaw> law;
  std::string variable;  // empty for exact laws

  bool is_exact() const noexcept { return law.index() == 0; }
  const ExactLaw& exact() const;
  const FormalLaw& formal() const;
};

using Bindings = std::map<std::string, GaussianRational, std::less<>>;

// Throws ParseError (with line and column) on malformed input, on an index
// out of range, on duplicate products and on more than one unbound parameter.
ParsedLaw parse_algebra(std::string_view text, const Bindings& bindings = {});

// Like parse_algebra but requires every parameter to be bound.
ExactLaw parse_exact_algebra(std::string_view text, const Bindings& bindings = {});

ContractionFamily parse_family(std::string_view text);

// A single scalar such as "1/2", "-i" or "3/4+1/2*i".
GaussianRational parse_scalar(std::string_view text);

// Canonical text; parse_algebra(print_algebra(law)) gives back the same
// constants.
std::string print_algebra(const ExactLaw& law);
std::string print_algebra(const FormalLaw& law, std::string_view variable);
std::string print_family(const ContractionFamily& family, std::string_view variable = "t");

}  // namespace leibniz
