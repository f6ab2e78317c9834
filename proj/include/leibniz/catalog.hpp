#pragma once

// Named laws, contraction families and perturbation directions.
//
// Laws (dimension 3 unless stated):
//   mu1          e1*e1 = e2, e2*e1 = e3
//   mu2 (b)      e1*e1 = e2, e3*e3 = b e2, e1*e3 = e2
//   mu3          e1*e1 = e2, e3*e3 = e2
//   mu4          e1*e1 = e2
//   mu5          e1*e2 = -e3, e2*e1 = e3   (heisenberg3 is an alias)
//   mu6          zero law
//   lambda5      x2*x2 = x3*x2 = x2*x3 = x1
//   null_filiform (n)  e_i*e1 = e_{i+1}, i < n
//   phi1_leib2   e1*e2 = e2, e2*e1 = -e2   (dimension 2, Lie)
//   phi2_leib2   e2*e1 = e2                (dimension 2)

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/family.hpp"

namespace leibniz {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;  // field-element parameters
  std::size_t dim = 0;              // 0: chosen by the caller
  std::string description;
};

const std::vector<CatalogEntry>& law_catalog();
const std::vector<std::string>& family_names();
const std::vector<std::string>& direction_names();

// Families of basis changes:
//   f            f(e1) = t e1, f(e2) = t^2 e2, f(e3) = e3 + t e1   (as printed)
//   f_corrected  f(e1) = e1 + t^-1 e2, f(e2) = t^-1 e3, f(e3) = e1
//   g            g(e1) = t e1, g(e2) = t^2 e2, g(e3) = e3
//   h            h(e_i) = t e_i
// Throws UnknownName.
ContractionFamily make_family(std::string_view name);

namespace detail {

template <ExactField F>
void put(AlgebraLaw<F>& law, std::size_t i, std::size_t j, std::size_t k, const F& v) {
  law(i - 1, j - 1, k - 1) = v;
}

}  // namespace detail

template <ExactField F>
AlgebraLaw<F> null_filiform(std::size_t n) {
  if (n == 0) throw InvalidArgument("null_filiform needs n >= 1");
  AlgebraLaw<F> law(n);
  for (std::size_t i = 1; i < n; ++i) detail::put(law, i, 1, i + 1, F::one());
  return law;
}

// Throws UnknownName, or InvalidArgument on a wrong parameter count.
// `dim` is required by null_filiform and rejected elsewhere.
template <ExactField F>
AlgebraLaw<F> make_law(std::string_view name, std::span<const F> params = {},
                       std::optional<std::size_t> dim = std::nullopt) {
  using detail::put;
  const F one = F::one();
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidArgument(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
    if (dim && name != "null_filiform") throw InvalidArgument(std::string(name) + " has a fixed dimension");
  };
  if (name == "null_filiform") {
    if (!params.empty()) throw InvalidArgument("null_filiform takes no field parameters");
    if (!dim) throw InvalidArgument("null_filiform needs a dimension n");
    return null_filiform<F>(*dim);
  }
  if (name == "mu1") {
    expect(0);
    AlgebraLaw<F> law(3);
    put(law, 1, 1, 2, one);
    put(law, 2, 1, 3, one);
    return law;
  }
  if (name == "mu2") {
    expect(1);
    AlgebraLaw<F> law(3);
    put(law, 1, 1, 2, one);
    put(law, 3, 3, 2, params[0]);
    put(law, 1, 3, 2, one);
    return law;
  }
  if (name == "mu3") {
    expect(0);
    AlgebraLaw<F> law(3);
    put(law, 1, 1, 2, one);
    put(law, 3, 3, 2, one);
    return law;
  }
  if (name == "mu4") {
    expect(0);
    AlgebraLaw<F> law(3);
    put(law, 1, 1, 2, one);
    return law;
  }
  if (name == "mu5" || name == "heisenberg3") {
    expect(0);
    AlgebraLaw<F> law(3);
    put(law, 1, 2, 3, -one);
    put(law, 2, 1, 3, one);
    return law;
  }
  if (name == "mu6") {
    expect(0);
    return AlgebraLaw<F>(3);
  }
  if (name == "lambda5") {
    expect(0);
    AlgebraLaw<F> law(3);
    put(law, 2, 2, 1, one);
    put(law, 3, 2, 1, one);
    put(law, 2, 3, 1, one);
    return law;
  }
  if (name == "phi1_leib2") {
    expect(0);
    AlgebraLaw<F> law(2);
    put(law, 1, 2, 2, one);
    put(law, 2, 1, 2, -one);
    return law;
  }
  if (name == "phi2_leib2") {
    expect(0);
    AlgebraLaw<F> law(2);
    put(law, 2, 1, 2, one);
    return law;
  }
  throw UnknownName("unknown catalog law '" + std::string(name) + "'");
}

template <ExactField F>
AlgebraLaw<F> make_law(std::string_view name, std::initializer_list<F> params) {
  std::vector<F> v(params);
  return make_law<F>(name, std::span<const F>(v));
}

// Bilinear directions for perturbations (not required to be Leibniz).
//   phi2            e3*e3 = e2
//   phi3            e1*e3 = e2
//   phi4            e3*e3 = e2, e1*e3 = e2
//   phi5            e1*e1 = e1        (as printed; mu5 + eps phi5 is not Leibniz)
//   phi5_corrected  e1*e1 = e3        (square of a generator into the center)
template <ExactField F>
AlgebraLaw<F> perturbation_direction(std::string_view name) {
  using detail::put;
  const F one = F::one();
  AlgebraLaw<F> phi(3);
  if (name == "phi2") {
    put(phi, 3, 3, 2, one);
  } else if (name == "phi3") {
    put(phi, 1, 3, 2, one);
  } else if (name == "phi4") {
    put(phi, 3, 3, 2, one);
    put(phi, 1, 3, 2, one);
  } else if (name == "phi5") {
    put(phi, 1, 1, 1, one);
  } else if (name == "phi5_corrected") {
    put(phi, 1, 1, 3, one);
  } else {
    throw UnknownName("unknown perturbation direction '" + std::string(name) + "'");
  }
  return phi;
}

}  // namespace leibniz
