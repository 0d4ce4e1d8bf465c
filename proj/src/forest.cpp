#include "pforest/forest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pforest {

namespace {

// Union-find over 0..n-1.
struct DisjointSets {
  std::vector<VertexId> parent;

  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  bool unite(VertexId u, VertexId v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    parent[v] = u;
    return true;
  }
};

}  // namespace

Forest Forest::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!edges.empty() && edges.back().b >= n)
    throw std::invalid_argument("forest edge out of range");

  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (!sets.unite(e.a, e.b)) throw std::invalid_argument("forest edges contain a cycle");
  }

  // Group vertices by root; scanning ids in order keeps every component
  // sorted and the list ordered by smallest member.
  std::vector<VertexId> rep(static_cast<std::size_t>(n));
  std::vector<int> comp_index(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId v = 0; v < n; ++v) rep[v] = sets.find(v);
  for (VertexId v = 0; v < n; ++v) {
    int& idx = comp_index[rep[v]];
    if (idx < 0) {
      idx = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[idx].push_back(v);
  }
  return Forest(n, std::move(edges), std::move(comps));
}

Forest::Forest(int n, std::vector<Edge> edges, std::vector<std::vector<VertexId>> components)
    : n_(n), edges_(std::move(edges)), components_(std::move(components)) {}

}  // namespace pforest
