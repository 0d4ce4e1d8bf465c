#include "pforest/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pforest {

namespace {

std::string edge_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Edge::Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {
  if (u == v) throw std::invalid_argument("loop edge " + edge_text(u, v));
  if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id in edge " + edge_text(u, v));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
  return from_edge_set(n, std::move(edges));
}

Graph Graph::from_edge_set(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges) {
    if (e.b >= n)  // e.a < e.b and e.a >= 0 by Edge's invariant
      throw std::invalid_argument("vertex out of range in edge " + edge_text(e.a, e.b));
  }
  if (!std::is_sorted(edges.begin(), edges.end())) std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw std::invalid_argument("duplicate edge " + edge_text(dup->a, dup->b));
  return Graph(n, std::move(edges));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  adj_offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offset_[static_cast<std::size_t>(e.a) + 1];
    ++adj_offset_[static_cast<std::size_t>(e.b) + 1];
  }
  for (int v = 0; v < n_; ++v) adj_offset_[v + 1] += adj_offset_[v];
  adj_.resize(edges_.size() * 2);
  std::vector<int> fill(adj_offset_.begin(), adj_offset_.end() - 1);
  // Two passes keep each neighbor list sorted: the smaller endpoints of a
  // vertex's edges arrive in increasing order, then the larger ones do.
  for (const Edge& e : edges_) adj_[fill[e.b]++] = e.a;
  for (const Edge& e : edges_) adj_[fill[e.a]++] = e.b;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const auto begin = static_cast<std::size_t>(adj_offset_[v]);
  const auto end = static_cast<std::size_t>(adj_offset_[v + 1]);
  return {adj_.data() + begin, end - begin};
}

int Graph::degree(VertexId v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return adj_offset_[v + 1] - adj_offset_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::with_edge(Edge e) const {
  if (has_edge(e)) throw std::invalid_argument("edge " + edge_text(e.a, e.b) + " already present");
  std::vector<Edge> edges;
  edges.reserve(edges_.size() + 1);
  const auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  edges.insert(edges.end(), edges_.begin(), pos);
  edges.push_back(e);
  edges.insert(edges.end(), pos, edges_.end());
  return from_edge_set(n_, std::move(edges));
}

Graph Graph::without_edge(Edge e) const {
  const auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos == edges_.end() || *pos != e)
    throw std::invalid_argument("edge " + edge_text(e.a, e.b) + " not present");
  std::vector<Edge> edges;
  edges.reserve(edges_.size() - 1);
  edges.insert(edges.end(), edges_.begin(), pos);
  edges.insert(edges.end(), pos + 1, edges_.end());
  return from_edge_set(n_, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex set");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex in set");
  if (vertices.front() < 0 || vertices.back() >= g.vertex_count())
    throw std::invalid_argument("vertex out of range in set");

  std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<VertexId>(i);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const VertexId la = local[e.a];
    const VertexId lb = local[e.b];
    // The relabeling is monotone, so edge order is preserved.
    if (la >= 0 && lb >= 0) edges.emplace_back(la, lb);
  }
  return {Graph::from_edge_set(static_cast<int>(vertices.size()), std::move(edges)),
          std::move(vertices)};
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> result;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    queue.assign(1, start);
    seen[start] = true;
    std::vector<VertexId> comp;
    while (!queue.empty()) {
      const VertexId v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (const VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexId> queue{0};
  seen[0] = true;
  int visited = 1;
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    for (const VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        queue.push_back(w);
      }
    }
  }
  return visited == n;
}

}  // namespace pforest
