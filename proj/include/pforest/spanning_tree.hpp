#pragma once

#include <span>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

/// Rooted spanning tree of a graph. Stores the tree itself (as a Graph)
/// plus the root and parent map from the traversal that produced it.
class SpanningTree {
 public:
  /// Builds a rooted tree from an explicit edge set. The edges must form
  /// a tree on all n vertices.
  static SpanningTree from_tree_edges(int n, std::vector<Edge> edges, VertexId root = 0);

  const Graph& as_graph() const { return tree_; }
  int vertex_count() const { return tree_.vertex_count(); }
  const std::vector<Edge>& edges() const { return tree_.edges(); }
  VertexId root() const { return root_; }
  /// Parent of v in the rooted tree; -1 at the root.
  VertexId parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return tree_.degree(v); }
  std::span<const VertexId> neighbors(VertexId v) const { return tree_.neighbors(v); }
  bool has_edge(Edge e) const { return tree_.has_edge(e); }

 private:
  SpanningTree(Graph tree, VertexId root, std::vector<VertexId> parent);

  Graph tree_;
  VertexId root_;
  std::vector<VertexId> parent_;
};

/// Breadth-first spanning tree rooted at vertex 0, neighbors explored in
/// increasing id order. Deterministic; requires a connected graph.
SpanningTree spanning_tree(const Graph& g);

/// True when g is connected with exactly n-1 edges.
bool is_tree(const Graph& g);

/// Components of the tree after deleting w: each sorted, ordered by
/// smallest member. There are exactly deg(w) of them.
std::vector<std::vector<VertexId>> branches_of(const Graph& tree, VertexId w);
std::vector<std::vector<VertexId>> branches_of(const SpanningTree& t, VertexId w);

/// The unique simple path u = x0, ..., xk = v in the tree.
std::vector<VertexId> tree_path(const Graph& tree, VertexId u, VertexId v);
std::vector<VertexId> tree_path(const SpanningTree& t, VertexId u, VertexId v);

}  // namespace pforest
