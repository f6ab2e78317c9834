#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "leibniz/graph.hpp"
#include "support.hpp"

using namespace leibniz;
using testing::GR;

namespace {

std::set<std::pair<std::string, std::string>> edges_in(const DegenerationGraph& g, EdgeState s) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges)
    if (e.state == s) out.insert({e.source, e.target});
  return out;
}

}  // namespace

TEST_CASE("leibn3 degeneration graph") {
  const DegenerationGraph g = build_degeneration_graph(leibn3_nodes());
  REQUIRE(g.nodes.size() == 7);
  CHECK(g.edges.size() == 42);

  const std::set<std::pair<std::string, std::string>> witnessed = {
      {"mu1", "mu2_0"}, {"mu1", "mu4"},  {"mu1", "mu6"},   {"mu2_0", "mu4"}, {"mu2_0", "mu6"},
      {"mu2_1", "mu4"}, {"mu2_1", "mu6"}, {"mu3", "mu4"},  {"mu3", "mu6"},   {"mu4", "mu6"},
      {"mu5", "mu6"}};
  CHECK(edges_in(g, EdgeState::Witnessed) == witnessed);
  const std::set<std::pair<std::string, std::string>> undecided = {{"mu2_1", "mu5"}, {"mu3", "mu5"}};
  CHECK(edges_in(g, EdgeState::Undecided) == undecided);
  CHECK(edges_in(g, EdgeState::Refuted).size() == 42 - witnessed.size() - undecided.size());

  CHECK(g.edge("mu1", "mu3").state == EdgeState::Refuted);
  CHECK(g.edge("mu1", "mu3").reason.find("Z_R") != std::string::npos);
  for (const auto& e : g.edges) {
    if (e.state != EdgeState::Witnessed) continue;
    REQUIRE(e.certificate.has_value());
    CHECK(verify(*e.certificate));
    CHECK(e.certificate->source_name == e.source);
  }
  CHECK_THROWS_AS(g.edge("mu1", "mu9"), UnknownName);
}

TEST_CASE("DOT output") {
  const DegenerationGraph g = build_degeneration_graph(leibn3_nodes());
  const std::string dot = emit_dot(g);
  CHECK(dot == emit_dot(build_degeneration_graph(leibn3_nodes())));
  CHECK(dot.rfind("// seed 20070617\ndigraph degenerations {\n", 0) == 0);
  CHECK(dot.find("\"mu1\" -> \"mu2_0\" [style=solid") != std::string::npos);
  CHECK(dot.find("\"mu3\" -> \"mu5\" [style=dashed];") != std::string::npos);
  CHECK(dot.find("\"mu1\" -> \"mu3\"") == std::string::npos);
  CHECK(dot.find("-> \"mu1\"") == std::string::npos);

  DegenerationGraph broken = g;
  for (auto& e : broken.edges)
    if (e.source == "mu1" && e.target == "mu4") e.certificate->target = testing::mu("mu5");
  CHECK_THROWS_AS(emit_dot(broken), InternalError);
}

TEST_CASE("other mu2 samples") {
  const DegenerationGraph g = build_degeneration_graph(leibn3_nodes(GR(Rational(1, 2))));
  CHECK(g.nodes[2].name == "mu2_1/2");
  CHECK(g.edge("mu2_1/2", "mu4").state == EdgeState::Witnessed);
  CHECK_THROWS_AS(leibn3_nodes(GR(0)), InvalidArgument);
}
