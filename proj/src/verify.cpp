#include "pforest/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pforest {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::NotSubgraph: return "NotSubgraph";
    case Rule::HasCycle: return "HasCycle";
    case Rule::EvenDegree: return "EvenDegree";
    case Rule::NotInduced: return "NotInduced";
    case Rule::NotSpanning: return "NotSpanning";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  std::ostringstream out;
  out << to_string(v.rule) << ": ";
  if (const auto* vertex = std::get_if<VertexId>(&v.witness)) {
    out << "vertex " << *vertex;
  } else if (const auto* edge = std::get_if<Edge>(&v.witness)) {
    out << "edge (" << edge->a << "," << edge->b << ")";
  } else {
    const auto& comp = std::get<std::vector<VertexId>>(v.witness);
    out << "component {";
    for (std::size_t i = 0; i < comp.size(); ++i) out << (i ? " " : "") << comp[i];
    out << "}";
  }
  return out.str();
}

Verdict verify_perfect_forest(const Graph& g, std::vector<Edge> forest_edges) {
  const int n = g.vertex_count();
  std::sort(forest_edges.begin(), forest_edges.end());
  forest_edges.erase(std::unique(forest_edges.begin(), forest_edges.end()), forest_edges.end());

  Verdict verdict;
  auto flag = [&verdict](Rule rule, auto witness) {
    verdict.violations.push_back({rule, std::move(witness)});
  };

  // 1. Subgraph. Edges outside g (including out-of-range ids) are
  // flagged and excluded from the structural checks below.
  std::vector<Edge> usable;
  for (const Edge& e : forest_edges) {
    if (!g.has_edge(e))
      flag(Rule::NotSubgraph, e);
    else
      usable.push_back(e);
  }

  // 2. Acyclicity.
  std::vector<VertexId> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : usable) {
    const VertexId ra = find(e.a);
    const VertexId rb = find(e.b);
    if (ra == rb)
      flag(Rule::HasCycle, e);
    else
      parent[ra] = rb;
  }

  // 3. Odd degrees; degree 0 additionally breaks spanning.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : usable) {
    ++degree[e.a];
    ++degree[e.b];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] % 2 == 0) {
      flag(Rule::EvenDegree, v);
      if (degree[v] == 0) flag(Rule::NotSpanning, v);
    }
  }

  // 4. Every component induced in g: no host edge may run between two
  // vertices of the same component without being a forest edge.
  std::vector<int> comp_of(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) comp_of[v] = find(v);
  std::vector<std::vector<VertexId>> comps;
  {
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
      int& idx = index[comp_of[v]];
      if (idx < 0) {
        idx = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[idx].push_back(v);
    }
  }
  for (const auto& comp : comps) {
    bool induced = true;
    for (const VertexId v : comp) {
      for (const VertexId w : g.neighbors(v)) {
        if (w <= v || comp_of[w] != comp_of[v]) continue;
        if (!std::binary_search(usable.begin(), usable.end(), Edge(v, w))) {
          induced = false;
          break;
        }
      }
      if (!induced) break;
    }
    if (!induced) flag(Rule::NotInduced, comp);
  }

  verdict.valid = verdict.violations.empty();
  return verdict;
}

}  // namespace pforest
