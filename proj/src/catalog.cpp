#include "leibniz/catalog.hpp"

namespace leibniz {

const std::vector<CatalogEntry>& law_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"heisenberg3", {}, 3, "alias of mu5"},
      {"lambda5", {}, 3, "x2*x2 = x3*x2 = x2*x3 = x1"},
      {"mu1", {}, 3, "e1*e1 = e2, e2*e1 = e3 (null-filiform, s = (3))"},
      {"mu2", {"b"}, 3, "e1*e1 = e2, e3*e3 = b*e2, e1*e3 = e2"},
      {"mu3", {}, 3, "e1*e1 = e2, e3*e3 = e2"},
      {"mu4", {}, 3, "e1*e1 = e2"},
      {"mu5", {}, 3, "e1*e2 = -e3, e2*e1 = e3 (Heisenberg)"},
      {"mu6", {}, 3, "abelian"},
      {"null_filiform", {}, 0, "e_i*e1 = e_{i+1} for i < n"},
      {"phi1_leib2", {}, 2, "e1*e2 = e2, e2*e1 = -e2 (Lie)"},
      {"phi2_leib2", {}, 2, "e2*e1 = e2"},
  };
  return entries;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"f", "f_corrected", "g", "h"};
  return names;
}

const std::vector<std::string>& direction_names() {
  static const std::vector<std::string> names = {"phi2", "phi3", "phi4", "phi5", "phi5_corrected"};
  return names;
}

ContractionFamily make_family(std::string_view name) {
  const RationalFunction t = RationalFunction::variable();
  const RationalFunction one = RationalFunction::one();
  Matrix<RationalFunction> m(3, 3);
  if (name == "f") {
    m(0, 0) = t;
    m(1, 1) = t * t;
    m(2, 2) = one;
    m(0, 2) = t;
  } else if (name == "f_corrected") {
    const RationalFunction inv_t = t.inverse();
    m(0, 0) = one;
    m(1, 0) = inv_t;
    m(2, 1) = inv_t;
    m(0, 2) = one;
  } else if (name == "g") {
    m(0, 0) = t;
    m(1, 1) = t * t;
    m(2, 2) = one;
  } else if (name == "h") {
    m(0, 0) = t;
    m(1, 1) = t;
    m(2, 2) = t;
  } else {
    throw UnknownName("unknown contraction family '" + std::string(name) + "'");
  }
  return ContractionFamily(std::move(m));
}

}  // namespace leibniz
