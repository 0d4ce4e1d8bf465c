#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace pforest {

/// Dense vertex index, 0..n-1 within its owning graph.
using VertexId = int;

/// Normalized undirected edge: a < b, no loops.
struct Edge {
  VertexId a;
  VertexId b;

  /// Normalizes endpoint order; rejects loops and negative ids.
  Edge(VertexId u, VertexId v);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edges are kept in lexicographic
/// order and adjacency is CSR with sorted neighbor lists, so every
/// traversal below is deterministic.
class Graph {
 public:
  /// Builds a graph from raw vertex pairs. Rejects loops, duplicate
  /// edges and out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs);

  /// Same, from already-normalized edges (sorted or not).
  static Graph from_edge_set(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  bool has_edge(Edge e) const { return has_edge(e.a, e.b); }

  /// Copy with one more edge; the edge must not be present.
  Graph with_edge(Edge e) const;
  /// Copy with one edge removed; the edge must be present.
  Graph without_edge(Edge e) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges);  // trusted: sorted, unique, in range

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_offset_;  // n+1 entries
  std::vector<VertexId> adj_;    // 2m entries, sorted per vertex
};

/// Induced subgraph relabeled to 0..|s|-1 plus the map back to host ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_host;  // local id -> host id, strictly increasing
};

/// Subgraph induced by a nonempty vertex set of g.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<VertexId> vertices);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace pforest
