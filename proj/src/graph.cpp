#include "leibniz/graph.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/catalog.hpp"

namespace leibniz {

std::string edge_state_name(EdgeState s) {
  switch (s) {
    case EdgeState::Witnessed: return "witnessed";
    case EdgeState::Refuted: return "refuted";
    case EdgeState::Undecided: return "undecided";
  }
  return "?";
}

const GraphEdge& DegenerationGraph::edge(std::string_view source, std::string_view target) const {
  for (const auto& e : edges)
    if (e.source == source && e.target == target) return e;
  throw UnknownName("no pair " + std::string(source) + " -> " + std::string(target) + " in the graph");
}

std::vector<GraphNode> leibn3_nodes(const GaussianRational& b) {
  using GR = GaussianRational;
  if (b.is_zero()) throw InvalidArgument("the second mu2 sample needs b != 0");
  std::vector<GraphNode> nodes{
      {"mu1", make_law<GR>("mu1")},
      {"mu2_0", make_law<GR>("mu2", {GR(0)})},
      {"mu2_" + to_string(b), make_law<GR>("mu2", {b})},
      {"mu3", make_law<GR>("mu3")},
      {"mu4", make_law<GR>("mu4")},
      {"mu5", make_law<GR>("mu5")},
      {"mu6", make_law<GR>("mu6")},
  };
  return nodes;
}

namespace {

std::string describe_refutation(const MonotonicityReport& m) {
  if (!m.orbit_ok)
    return "orbit dim " + std::to_string(m.source_orbit_dim) + " -> " + std::to_string(m.target_orbit_dim) +
           " does not drop";
  if (!m.right_center_ok)
    return "dim Z_R " + std::to_string(m.source_right_center_dim) + " -> " +
           std::to_string(m.target_right_center_dim) + " drops";
  return "characteristic sequence " + to_string(*m.source_sequence) + " -> " + to_string(*m.target_sequence) +
         " increases";
}

std::string describe_diagonal(const ContractionFamily& family) {
  // The search only produces pure diagonal families when no pre-change is given.
  std::string out = "diag(";
  for (std::size_t k = 0; k < family.dim(); ++k) {
    if (k) out += ",";
    out += to_string(family.matrix()(k, k), "t");
  }
  return out + ")";
}

}  // namespace

DegenerationGraph build_degeneration_graph(std::vector<GraphNode> nodes, std::uint64_t seed) {
  std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  for (std::size_t k = 1; k < nodes.size(); ++k)
    if (nodes[k].name == nodes[k - 1].name) throw InvalidArgument("duplicate node name " + nodes[k].name);

  DegenerationGraph g;
  g.seed = seed;
  for (const auto& s : nodes)
    for (const auto& t : nodes) {
      if (&s == &t) continue;
      GraphEdge e{s.name, t.name, EdgeState::Undecided, "", std::nullopt, ""};
      const MonotonicityReport m = check_contraction_monotonicity(s.law, t.law, seed);
      if (!m.passes()) {
        e.state = EdgeState::Refuted;
        e.reason = describe_refutation(m);
        g.edges.push_back(std::move(e));
        continue;
      }
      for (const auto& name : family_names()) {
        const ContractionFamily family = make_family(name);
        if (family.dim() != s.law.dim()) continue;
        if (auto cert = certify_contraction(s.law, family, t.law, seed)) {
          e.witness = name;
          e.certificate = std::move(cert);
          break;
        }
      }
      if (!e.certificate) {
        DiagonalSearchOptions options;
        options.exponent_bound = 2;
        options.seed = seed;
        if (auto cert = find_diagonal_contraction(s.law, t.law, options)) {
          e.witness = describe_diagonal(cert->family);
          e.certificate = std::move(cert);
        }
      }
      if (e.certificate) {
        e.state = EdgeState::Witnessed;
        e.certificate->source_name = s.name;
        e.certificate->target_name = t.name;
      }
      g.edges.push_back(std::move(e));
    }
  g.nodes = std::move(nodes);
  return g;
}

std::string emit_dot(const DegenerationGraph& graph) {
  std::ostringstream out;
  out << "// seed " << graph.seed << "\n";
  out << "digraph degenerations {\n";
  for (const auto& n : graph.nodes) out << "  \"" << n.name << "\";\n";
  for (const auto& e : graph.edges) {
    if (e.state == EdgeState::Refuted) continue;
    if (e.state == EdgeState::Witnessed) {
      auto law_of = [&](const std::string& name) -> const ExactLaw& {
        for (const auto& n : graph.nodes)
          if (n.name == name) return n.law;
        throw InternalError("edge names an unknown node " + name);
      };
      if (!e.certificate || !(e.certificate->source == law_of(e.source)) ||
          !(e.certificate->target == law_of(e.target)) || !verify(*e.certificate))
        throw InternalError("certificate for " + e.source + " -> " + e.target + " failed re-verification");
      out << "  \"" << e.source << "\" -> \"" << e.target << "\" [style=solid, label=\"" << e.witness << "\"];\n";
    } else {
      out << "  \"" << e.source << "\" -> \"" << e.target << "\" [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace leibniz
