#include "leibniz/report.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/catalog.hpp"
#include "leibniz/classify.hpp"

namespace leibniz {

namespace {

std::string indent(const std::string& block, std::string_view pad = "  ") {
  std::string out;
  std::size_t start = 0;
  while (start < block.size()) {
    std::size_t end = block.find('\n', start);
    if (end == std::string::npos) end = block.size();
    out += std::string(pad) + block.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dims(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto d : v) out += (out.empty() ? "" : " ") + std::to_string(d);
  return out;
}

std::string row(std::string_view key, const std::string& value) {
  std::string k(key);
  k.resize(std::max<std::size_t>(k.size() + 1, 24), ' ');
  return k + value + "\n";
}

template <ExactField F>
std::string scalar_text(const F& x, std::string_view var) {
  if constexpr (std::is_same_v<F, RationalFunction>) return to_string(x, var);
  else return to_string(x);
}

template <ExactField F>
std::string law_text(const AlgebraLaw<F>& law, std::string_view var) {
  if constexpr (std::is_same_v<F, RationalFunction>) return print_algebra(law, var);
  else return print_algebra(law);
}

template <ExactField F>
std::string check_text(const AlgebraLaw<F>& law, std::string_view var, bool& ok) {
  const LeibnizReport r = check_leibniz(law);
  ok = r.holds;
  std::string out = row("dim", std::to_string(law.dim()));
  if (r.holds) {
    out += row("leibniz identity", std::is_same_v<F, RationalFunction> ? "holds identically in " + std::string(var)
                                                                        : std::string("holds"));
    return out;
  }
  out += row("leibniz identity", "fails");
  out += row("violations", std::to_string(r.violations.size()));
  for (const auto& v : r.violations) {
    out += "  (" + std::to_string(v[0] + 1) + "," + std::to_string(v[1] + 1) + "," + std::to_string(v[2] + 1) + "," +
           std::to_string(v[3] + 1) + ") residual " + scalar_text(leibniz_residual(law, v[0], v[1], v[2], v[3]), var) +
           "\n";
  }
  return out;
}

template <ExactField F>
std::string invariants_text(const AlgebraLaw<F>& law, std::uint64_t seed) {
  const bool nilpotent = is_nilpotent(law);
  std::string out = row("dim", std::to_string(law.dim()));
  out += row("leibniz identity", check_leibniz(law).holds ? "holds" : "fails");
  out += row("lie", yes_no(is_lie(law)));
  out += row("central series dims", dims(central_series_dims(law)));
  out += row("nilpotent", yes_no(nilpotent));
  out += row("dim Z_R", std::to_string(right_center(law).dim()));
  out += row("dim center", std::to_string(two_sided_center(law).dim()));
  if (nilpotent && law.dim() > 0) {
    auto cs = characteristic_sequence(law, seed);
    out += row("characteristic sequence", to_string(cs.sequence));
  }
  const std::size_t der = derivation_dim(law);
  out += row("dim Der", std::to_string(der));
  out += row("orbit dim", std::to_string(law.dim() * law.dim() - der));
  out += row("seed", std::to_string(seed));
  return out;
}

template <ExactField F>
std::string classify_text(const AlgebraLaw<F>& law, std::string_view var, std::uint64_t seed) {
  const Classification<F> c = classify_nilpotent(law, seed);
  std::string out = row("class", to_string(c.label, var));
  out += row("characteristic sequence", to_string(c.sequence));
  out += row("seed", std::to_string(seed));
  out += "certificate (columns are the adapted basis; it maps the law onto the class representative):\n";
  out += indent(format_matrix(c.certificate, var));
  out += "representative:\n";
  out += indent(law_text(representative(c.label), var));
  return out;
}

std::string sequence_text(const std::optional<CharacteristicSequence>& s) { return s ? to_string(*s) : "-"; }

}  // namespace

template <ExactField F>
std::string format_matrix(const Matrix<F>& m, std::string_view var) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = scalar_text(m(r, c), var);
      width[c] = std::max(width[c], cells[r][c].size());
    }
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string cell = cells[r][c];
      cell.insert(0, width[c] - cell.size(), ' ');
      out += " " + cell;
    }
    out += " ]\n";
  }
  return out;
}

template std::string format_matrix(const Matrix<GaussianRational>&, std::string_view);
template std::string format_matrix(const Matrix<RationalFunction>&, std::string_view);

Report check_report(const ParsedLaw& law) {
  Report r;
  std::visit([&](const auto& l) { r.text = check_text(l, law.variable, r.ok); }, law.law);
  return r;
}

Report invariants_report(const ParsedLaw& law, std::uint64_t seed) {
  Report r;
  std::visit([&](const auto& l) { r.text = invariants_text(l, seed); }, law.law);
  return r;
}

Report classify_report(const ParsedLaw& law, std::uint64_t seed) {
  Report r;
  std::visit([&](const auto& l) { r.text = classify_text(l, law.variable, seed); }, law.law);
  return r;
}

std::string format_monotonicity(const MonotonicityReport& m) {
  auto ok = [](bool b) { return b ? "ok" : "FAILS"; };
  std::string out;
  out += row("  orbit dim", std::to_string(m.source_orbit_dim) + " -> " + std::to_string(m.target_orbit_dim) +
                                "  (must drop) " + ok(m.orbit_ok));
  out += row("  dim Z_R", std::to_string(m.source_right_center_dim) + " -> " +
                              std::to_string(m.target_right_center_dim) + "  (must not drop) " + ok(m.right_center_ok));
  out += row("  char. sequence", sequence_text(m.source_sequence) + " -> " + sequence_text(m.target_sequence) +
                                     "  (must not increase) " + ok(m.sequence_ok));
  return out;
}

std::string format_certificate(const ContractionCertificate& cert) {
  std::string out = "certificate\n";
  out += "  source " + (cert.source_name.empty() ? std::string("(input)") : cert.source_name) + ":\n";
  out += indent(print_algebra(cert.source), "    ");
  out += "  family f_t (columns are f_t(e_j)):\n";
  out += indent(format_matrix(cert.family.matrix(), "t"), "    ");
  out += "  limit at t = 0:\n";
  out += indent(print_algebra(cert.result), "    ");
  out += "  target " + (cert.target_name.empty() ? std::string("(representative)") : cert.target_name) + ":\n";
  out += indent(print_algebra(cert.target), "    ");
  if (cert.isomorphism) {
    out += "  isomorphism limit -> target:\n";
    out += indent(format_matrix(*cert.isomorphism), "    ");
  } else {
    out += "  isomorphism limit -> target: identity\n";
  }
  out += "  monotonicity:\n" + indent(format_monotonicity(cert.monotonicity));
  out += "  seed " + std::to_string(cert.seed) + "\n";
  out += "  verified: " + yes_no(verify(cert)) + "\n";
  return out;
}

Report contract_report(const ExactLaw& law, const ContractionFamily& family, std::uint64_t seed) {
  Report r;
  r.text = "family f_t (columns are f_t(e_j)):\n" + indent(format_matrix(family.matrix(), "t"));
  ExactLaw limit;
  try {
    limit = contract(law, family);
  } catch (const PoleAtZero& e) {
    r.ok = false;
    r.text += std::string("no limit: ") + e.what() + "\n";
    return r;
  }
  r.text += "limit at t = 0:\n" + indent(print_algebra(limit));
  const MonotonicityReport m = check_contraction_monotonicity(law, limit, seed);
  r.text += "monotonicity source -> limit:\n" + format_monotonicity(m);
  r.text += row("nontrivial", m.orbit_ok ? "yes" : "no (orbit dimension unchanged)");

  const std::size_t n = law.dim();
  if ((n == 2 || n == 3) && is_nilpotent(limit)) {
    const auto c = classify_nilpotent(limit, seed);
    r.text += row("limit class", to_string(c.label));
    if (auto cert = certify_contraction(law, family, representative(c.label), seed)) {
      cert->target_name = to_string(c.label);
      r.text += format_certificate(*cert);
    }
  }
  return r;
}

Report perturb_report(const ExactLaw& law, const ExactLaw& direction, std::uint64_t seed) {
  Report r;
  const FormalLaw p = perturb(law, direction);
  r.text = "perturbed law over Q(i)(eps):\n" + indent(print_algebra(p, "eps"));
  bool holds = true;
  r.text += check_text(p, "eps", holds);
  r.ok = holds;
  const bool nilpotent = is_nilpotent(p);
  r.text += row("lie", yes_no(is_lie(p)));
  r.text += row("nilpotent", yes_no(nilpotent));
  if (holds && nilpotent && (p.dim() == 2 || p.dim() == 3)) {
    const auto c = classify_nilpotent(p, seed);
    r.text += row("class", to_string(c.label, "eps"));
    r.text += "certificate:\n" + indent(format_matrix(c.certificate, "eps"));
  }
  return r;
}

std::string catalog_report() {
  std::string out = "laws:\n";
  for (const auto& e : law_catalog()) {
    std::string name = e.name;
    if (!e.params.empty()) {
      name += "(";
      for (std::size_t k = 0; k < e.params.size(); ++k) name += (k ? "," : "") + e.params[k];
      name += ")";
    }
    if (e.name == "null_filiform") name += "(n)";
    out += row("  " + name, (e.dim ? "dim " + std::to_string(e.dim) : std::string("dim n")) + "  " + e.description);
  }
  out += "families:\n";
  for (const auto& name : family_names()) {
    out += "  " + name + "\n";
    out += indent(print_family(make_family(name)), "    ");
  }
  out += "directions:\n";
  for (const auto& name : direction_names()) {
    out += "  " + name + "\n";
    out += indent(print_algebra(perturbation_direction<GaussianRational>(name)), "    ");
  }
  return out;
}

}  // namespace leibniz
