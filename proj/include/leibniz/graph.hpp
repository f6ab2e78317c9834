#pragma once

// Degeneration graph over a fixed set of laws. Each ordered pair is either
// witnessed by a verified contraction certificate, refuted by one of the
// monotonicity inequalities, or left undecided.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/deform.hpp"

namespace leibniz {

enum class EdgeState { Witnessed, Refuted, Undecided };

std::string edge_state_name(EdgeState s);

struct GraphNode {
  std::string name;
  ExactLaw law;
};

struct GraphEdge {
  std::string source;
  std::string target;
  EdgeState state = EdgeState::Undecided;
  std::string witness;  // family name for witnessed edges
  std::optional<ContractionCertificate> certificate;
  std::string reason;   // failed inequality for refuted edges
};

struct DegenerationGraph {
  std::vector<GraphNode> nodes;  // sorted by name
  std::vector<GraphEdge> edges;  // every ordered pair, sorted by (source, target)
  std::uint64_t seed = kDefaultSeed;

  const GraphEdge& edge(std::string_view source, std::string_view target) const;
};

// mu1, mu2_0, mu2_<b>, mu3, mu4, mu5, mu6 with the second mu2 sample at b.
std::vector<GraphNode> leibn3_nodes(const GaussianRational& b = GaussianRational::one());

// Witnesses are looked for among the catalog families first, then by
// find_diagonal_contraction with exponent bound 2.
DegenerationGraph build_degeneration_graph(std::vector<GraphNode> nodes, std::uint64_t seed = kDefaultSeed);

// Deterministic DOT text. Witnessed edges are re-verified first; a failing
// certificate throws InternalError rather than printing a solid edge.
// Refuted pairs are omitted.
std::string emit_dot(const DegenerationGraph& graph);

}  // namespace leibniz
