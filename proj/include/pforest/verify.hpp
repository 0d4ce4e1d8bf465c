#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

enum class Rule {
  NotSubgraph,  // forest edge missing from the host graph
  HasCycle,     // edge closes a cycle in the candidate
  EvenDegree,   // vertex with even degree (0 counts)
  NotInduced,   // component missing a host edge between its vertices
  NotSpanning,  // vertex with degree 0, reported alongside EvenDegree
};

/// One broken rule plus the vertex, edge or component that witnesses it.
struct Violation {
  Rule rule;
  std::variant<VertexId, Edge, std::vector<VertexId>> witness;
};

struct Verdict {
  bool valid = false;
  std::vector<Violation> violations;  // empty iff valid
};

std::string to_string(Rule rule);
std::string to_string(const Violation& v);

/// Definition-level check that `forest_edges` is a perfect forest of g:
/// a subgraph, acyclic, every vertex of odd degree, every component
/// induced in g. All violations are reported, not just the first, and
/// garbage input (unknown edges, duplicates) is tolerated.
Verdict verify_perfect_forest(const Graph& g, std::vector<Edge> forest_edges);

}  // namespace pforest
