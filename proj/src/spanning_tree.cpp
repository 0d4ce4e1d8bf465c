#include "pforest/spanning_tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace pforest {

SpanningTree::SpanningTree(Graph tree, VertexId root, std::vector<VertexId> parent)
    : tree_(std::move(tree)), root_(root), parent_(std::move(parent)) {}

SpanningTree SpanningTree::from_tree_edges(int n, std::vector<Edge> edges, VertexId root) {
  Graph tree = Graph::from_edge_set(n, std::move(edges));
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (root < 0 || root >= n) throw std::out_of_range("root out of range");
  if (tree.edge_count() != n - 1) throw std::invalid_argument("edge set is not a tree");

  std::vector<VertexId> parent(static_cast<std::size_t>(n), -2);
  parent[root] = -1;
  std::queue<VertexId> queue;
  queue.push(root);
  int visited = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (const VertexId w : tree.neighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        ++visited;
        queue.push(w);
      }
    }
  }
  if (visited != n) throw std::invalid_argument("edge set is not a tree");
  return SpanningTree(std::move(tree), root, std::move(parent));
}

SpanningTree spanning_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spanning tree needs at least one vertex");

  std::vector<VertexId> parent(static_cast<std::size_t>(n), -2);
  parent[0] = -1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  std::queue<VertexId> queue;
  queue.push(0);
  int visited = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (const VertexId w : g.neighbors(v)) {  // sorted, so the trace is canonical
      if (parent[w] == -2) {
        parent[w] = v;
        ++visited;
        edges.emplace_back(v, w);
        queue.push(w);
      }
    }
  }
  if (visited != n) throw std::invalid_argument("graph is disconnected");
  Graph tree = Graph::from_edge_set(n, std::move(edges));
  return SpanningTree::from_tree_edges(n, tree.edges(), 0);
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

namespace {

// Components of `tree` after deleting w, over the tree's adjacency.
std::vector<std::vector<VertexId>> branches_impl(const Graph& tree, VertexId w) {
  const int n = tree.vertex_count();
  if (w < 0 || w >= n) throw std::out_of_range("vertex " + std::to_string(w) + " out of range");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[w] = true;
  std::vector<std::vector<VertexId>> result;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    stack.assign(1, start);
    seen[start] = true;
    std::vector<VertexId> branch;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      branch.push_back(v);
      for (const VertexId x : tree.neighbors(v)) {
        if (!seen[x]) {
          seen[x] = true;
          stack.push_back(x);
        }
      }
    }
    std::sort(branch.begin(), branch.end());
    result.push_back(std::move(branch));
  }
  return result;
}

std::vector<VertexId> tree_path_impl(const Graph& tree, VertexId u, VertexId v) {
  const int n = tree.vertex_count();
  if (u < 0 || u >= n) throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
  if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (u == v) return {u};

  std::vector<VertexId> parent(static_cast<std::size_t>(n), -2);
  parent[u] = -1;
  std::queue<VertexId> queue;
  queue.push(u);
  while (!queue.empty() && parent[v] == -2) {
    const VertexId x = queue.front();
    queue.pop();
    for (const VertexId y : tree.neighbors(x)) {
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push(y);
      }
    }
  }
  if (parent[v] == -2) throw std::invalid_argument("vertices are not connected in the tree");

  std::vector<VertexId> path;
  for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::vector<VertexId>> branches_of(const Graph& tree, VertexId w) {
  if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
  return branches_impl(tree, w);
}

std::vector<std::vector<VertexId>> branches_of(const SpanningTree& t, VertexId w) {
  return branches_impl(t.as_graph(), w);
}

std::vector<VertexId> tree_path(const Graph& tree, VertexId u, VertexId v) {
  if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
  return tree_path_impl(tree, u, v);
}

std::vector<VertexId> tree_path(const SpanningTree& t, VertexId u, VertexId v) {
  return tree_path_impl(t.as_graph(), u, v);
}

}  // namespace pforest
