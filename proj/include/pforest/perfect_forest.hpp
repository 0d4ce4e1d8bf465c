#pragma once

#include <optional>
#include <vector>

#include "pforest/forest.hpp"
#include "pforest/graph.hpp"
#include "pforest/spanning_tree.hpp"

namespace pforest {

/// Two-part vertex partition where both parts have even size and each
/// induces a connected subgraph of the host.
struct Split {
  std::vector<VertexId> part_a;
  std::vector<VertexId> part_b;
};

/// The tree path between the endpoints of a closing edge. Together with
/// the closing edge it is the unique cycle that edge creates.
struct CyclePath {
  std::vector<VertexId> vertices;  // x0, ..., xk; k >= 2
  Edge closing;
};

/// Spanning tree of g with at least two vertices of even tree-degree.
///
/// Takes the breadth-first tree T; if some vertex already has even
/// degree, T is returned as is (parity then forces at least two such
/// vertices). Otherwise the lexicographically smallest non-tree edge
/// e = (u, v) is added and the tree edge from u to its neighbor on the
/// u-v tree path is dropped, which makes two degrees even.
///
/// Fails when g is a tree with all degrees odd: its only spanning tree
/// is g itself.
SpanningTree even_spanning_tree(const Graph& g);

/// Even split of a connected even-order graph (n >= 4) that is not a
/// tree with all degrees odd.
///
/// With t = even_spanning_tree(g) and w the smallest vertex of even
/// tree-degree, part_a is the smallest even-sized branch of w (one must
/// exist: evenly many branches with sizes summing to the odd n-1) and
/// part_b the rest. Both parts induce connected even-order subgraphs.
Split choose_even_split(const Graph& g);

/// Perfect forest by induction on the vertex count.
///
/// A subproblem that is a tree with all degrees odd is itself the
/// forest; anything else is divided by choose_even_split and both
/// halves are solved as induced subgraphs. Runs on an explicit work
/// stack; depth grows with n.
Forest perfect_forest_split(const Graph& g);

/// Edge selection policy for the edge-induction algorithm.
///
/// Cyclic graph: the lexicographically smallest non-bridge edge.
/// Non-star tree: the smallest edge whose endpoints both have degree
/// >= 2, so neither removal component is a single vertex.
/// Star (or K2): nullopt. Every edge is pendant, and a star is already
/// a forest with all degrees odd when its order is even.
std::optional<Edge> select_edge(const Graph& g);

/// The unique cycle path closed by `closing` inside the tree formed by
/// `tree_edges` (closing itself must not be a tree edge).
CyclePath fundamental_cycle_path(const std::vector<Edge>& tree_edges, Edge closing);

/// Cycle repair for the edge-induction algorithm.
///
/// `component` must be a tree with all degrees odd, both endpoints of
/// `closing` inside it, and the host-induced subgraph on its vertices
/// must contain exactly the component edges plus `closing`. Removing
/// the cycle-path edges lowers interior degrees by 2 and the endpoint
/// degrees by 1; putting `closing` back restores odd parity everywhere.
/// The result is an acyclic fragment whose pieces stay induced in host.
std::vector<Edge> reattach_cycle_fix(const std::vector<Edge>& component, Edge closing,
                                     const Graph& host);

/// Perfect forest by induction on the edge count.
///
/// Non-bridge edges are peeled one at a time (smallest first) until a
/// spanning tree remains. The tree is resolved by splitting at
/// select_edge's choice, with stars as the base case: even/even
/// removal components recurse directly, odd/odd ones each absorb the
/// split edge plus its far endpoint. Peeled edges are then replayed in
/// reverse: an edge rejoining two forest components is ignored, one
/// landing inside a component triggers reattach_cycle_fix. Runs on
/// explicit stacks; the peel chain grows with m.
Forest perfect_forest_edge(const Graph& g);

}  // namespace pforest
