#include "pforest/perfect_forest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pforest {

namespace {

void require_even_connected(const Graph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("graph needs at least two vertices");
  if (g.vertex_count() % 2 != 0)
    throw std::invalid_argument("graph has an odd number of vertices");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
}

bool all_degrees_odd(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 0) return false;
  return true;
}

// Connectivity of g with one edge ignored; the bridge test.
bool connected_without_edge(const Graph& g, Edge skip) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      if ((v == skip.a && w == skip.b) || (v == skip.b && w == skip.a)) continue;
      seen[w] = true;
      ++visited;
      stack.push_back(w);
    }
  }
  return visited == n;
}

std::vector<VertexId> identity_map(int n) {
  std::vector<VertexId> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  return map;
}

// Component labels of the forest (V = 0..n-1, edges = f).
std::vector<int> forest_component_ids(int n, const std::vector<Edge>& f) {
  std::vector<VertexId> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : f) parent[find(e.a)] = find(e.b);
  std::vector<int> id(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) id[v] = find(v);
  return id;
}

}  // namespace

SpanningTree even_spanning_tree(const Graph& g) {
  require_even_connected(g);
  SpanningTree t = spanning_tree(g);

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (t.degree(v) % 2 == 0) return t;  // parity gives a second one for free

  // All tree degrees odd; rotate in the smallest non-tree edge.
  if (g.edge_count() == g.vertex_count() - 1)
    throw std::invalid_argument(
        "tree with all degrees odd: no spanning tree with an even-degree vertex exists");
  const auto extra = std::find_if(g.edges().begin(), g.edges().end(),
                                  [&t](const Edge& e) { return !t.has_edge(e); });
  const std::vector<VertexId> path = tree_path(t, extra->a, extra->b);
  const VertexId w = path[1];  // neighbor of the smaller endpoint on the path

  std::vector<Edge> edges = t.edges();
  edges.erase(std::find(edges.begin(), edges.end(), Edge(extra->a, w)));
  edges.push_back(*extra);
  return SpanningTree::from_tree_edges(g.vertex_count(), std::move(edges), 0);
}

Split choose_even_split(const Graph& g) {
  if (g.vertex_count() == 2) throw std::invalid_argument("nothing to split in a 2-vertex graph");
  SpanningTree t = even_spanning_tree(g);

  VertexId w = -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.degree(v) % 2 == 0) {
      w = v;
      break;
    }
  }

  // Evenly many branches with sizes summing to the odd n-1, so at least
  // one branch has even size.
  const std::vector<std::vector<VertexId>> branches = branches_of(t, w);
  const auto chosen =
      std::find_if(branches.begin(), branches.end(),
                   [](const std::vector<VertexId>& b) { return b.size() % 2 == 0; });
  if (chosen == branches.end())
    throw std::logic_error("no even branch at an even-degree vertex");

  Split split;
  split.part_a = *chosen;
  std::vector<bool> in_a(static_cast<std::size_t>(g.vertex_count()), false);
  for (const VertexId v : split.part_a) in_a[v] = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_a[v]) split.part_b.push_back(v);
  return split;
}

Forest perfect_forest_split(const Graph& g) {
  require_even_connected(g);

  std::vector<Edge> acc;
  std::vector<std::pair<Graph, std::vector<VertexId>>> work;
  work.emplace_back(g, identity_map(g.vertex_count()));

  while (!work.empty()) {
    auto [h, to_host] = std::move(work.back());
    work.pop_back();

    // Subproblems are connected by construction, so edge count alone
    // settles tree-ness.
    if (h.edge_count() == h.vertex_count() - 1 && all_degrees_odd(h)) {
      for (const Edge& e : h.edges()) acc.emplace_back(to_host[e.a], to_host[e.b]);
      continue;
    }

    const Split split = choose_even_split(h);
    for (const std::vector<VertexId>* part : {&split.part_a, &split.part_b}) {
      InducedSubgraph sub = induced_subgraph(h, *part);
      std::vector<VertexId> map(sub.to_host.size());
      for (std::size_t i = 0; i < sub.to_host.size(); ++i) map[i] = to_host[sub.to_host[i]];
      work.emplace_back(std::move(sub.graph), std::move(map));
    }
  }
  return Forest::from_edges(g.vertex_count(), std::move(acc));
}

std::optional<Edge> select_edge(const Graph& g) {
  if (g.edge_count() < 1) throw std::invalid_argument("graph has no edges");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");

  if (g.edge_count() >= g.vertex_count()) {
    // A cycle exists, so some edge is not a bridge.
    for (const Edge& e : g.edges())
      if (connected_without_edge(g, e)) return e;
    throw std::logic_error("cyclic graph without a non-bridge edge");
  }
  // Tree: pick the smallest non-pendant edge; a star has none.
  for (const Edge& e : g.edges())
    if (g.degree(e.a) >= 2 && g.degree(e.b) >= 2) return e;
  return std::nullopt;
}

namespace {

// Adjacency of an edge set living on a subset of host ids.
struct LocalTree {
  std::vector<VertexId> vertices;           // sorted
  std::vector<std::vector<VertexId>> adj;   // parallel to vertices

  int index_of(VertexId v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
  }
};

LocalTree local_tree(const std::vector<Edge>& edges) {
  LocalTree t;
  for (const Edge& e : edges) {
    t.vertices.push_back(e.a);
    t.vertices.push_back(e.b);
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
  t.adj.resize(t.vertices.size());
  for (const Edge& e : edges) {
    const int ia = t.index_of(e.a);
    const int ib = t.index_of(e.b);
    t.adj[ia].push_back(e.b);
    t.adj[ib].push_back(e.a);
  }
  return t;
}

}  // namespace

CyclePath fundamental_cycle_path(const std::vector<Edge>& tree_edges, Edge closing) {
  if (tree_edges.empty()) throw std::invalid_argument("empty tree");
  if (std::find(tree_edges.begin(), tree_edges.end(), closing) != tree_edges.end())
    throw std::invalid_argument("closing edge is a tree edge");

  const LocalTree t = local_tree(tree_edges);
  if (t.vertices.size() != tree_edges.size() + 1)
    throw std::invalid_argument("edge set is not a tree");
  const int src = t.index_of(closing.a);
  if (src < 0 || t.index_of(closing.b) < 0)
    throw std::invalid_argument("closing edge endpoint not in the tree");

  std::vector<VertexId> parent(t.vertices.size(), -2);
  parent[src] = -1;
  std::vector<int> queue{src};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int vi = queue[head];
    for (const VertexId w : t.adj[vi]) {
      const int wi = t.index_of(w);
      if (parent[wi] == -2) {
        parent[wi] = vi;
        queue.push_back(wi);
      }
    }
  }
  const int dst = t.index_of(closing.b);
  if (parent[dst] == -2) throw std::invalid_argument("edge set is not a tree");

  std::vector<VertexId> path;
  for (int vi = dst; vi != -1; vi = parent[vi]) path.push_back(t.vertices[vi]);
  std::reverse(path.begin(), path.end());
  return CyclePath{std::move(path), closing};
}

std::vector<Edge> reattach_cycle_fix(const std::vector<Edge>& component, Edge closing,
                                     const Graph& host) {
  if (component.empty()) throw std::invalid_argument("empty component");
  const LocalTree t = local_tree(component);

  // The component must be a tree with all degrees odd.
  if (t.vertices.size() != component.size() + 1)
    throw std::invalid_argument("component is not a tree");
  for (std::size_t i = 0; i < t.vertices.size(); ++i)
    if (t.adj[i].size() % 2 == 0)
      throw std::invalid_argument("component has a vertex of even degree");

  if (t.index_of(closing.a) < 0 || t.index_of(closing.b) < 0)
    throw std::invalid_argument("closing edge endpoint not in the component");

  // Key fact: inside the component's vertex set the host holds exactly
  // the component edges plus the closing edge.
  std::size_t host_inside = 0;
  for (const VertexId v : t.vertices)
    for (const VertexId w : host.neighbors(v))
      if (w > v && t.index_of(w) >= 0) ++host_inside;
  for (const Edge& e : component)
    if (!host.has_edge(e)) throw std::invalid_argument("component edge missing from the host");
  if (!host.has_edge(closing))
    throw std::invalid_argument("closing edge missing from the host");
  if (host_inside != component.size() + 1)
    throw std::invalid_argument("component is not induced up to the closing edge");

  const CyclePath cycle = fundamental_cycle_path(component, closing);

  std::vector<Edge> path_edges;
  path_edges.reserve(cycle.vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < cycle.vertices.size(); ++i)
    path_edges.emplace_back(cycle.vertices[i], cycle.vertices[i + 1]);
  std::sort(path_edges.begin(), path_edges.end());

  std::vector<Edge> repaired;
  repaired.reserve(component.size() - path_edges.size() + 1);
  std::vector<Edge> sorted_component = component;
  std::sort(sorted_component.begin(), sorted_component.end());
  std::set_difference(sorted_component.begin(), sorted_component.end(), path_edges.begin(),
                      path_edges.end(), std::back_inserter(repaired));
  repaired.insert(std::lower_bound(repaired.begin(), repaired.end(), closing), closing);
  return repaired;
}

Forest perfect_forest_edge(const Graph& g) {
  require_even_connected(g);

  // Phase 1: peel non-bridge edges, smallest first, down to a spanning
  // tree. Bridges stay bridges as edges disappear, so candidates that
  // failed once are never retested.
  Graph cur = g;
  std::vector<Edge> peeled;
  std::optional<Edge> last_bridge;
  while (cur.edge_count() >= cur.vertex_count()) {
    const auto& edges = cur.edges();
    auto it = last_bridge ? std::upper_bound(edges.begin(), edges.end(), *last_bridge)
                          : edges.begin();
    std::optional<Edge> found;
    for (; it != edges.end(); ++it) {
      if (connected_without_edge(cur, *it)) {
        found = *it;
        break;
      }
      last_bridge = *it;
    }
    if (!found) throw std::logic_error("cyclic graph without a non-bridge edge");
    peeled.push_back(*found);
    cur = cur.without_edge(*found);
  }

  // Phase 2: resolve the remaining spanning tree by splitting at the
  // selected edge; stars are the base case. Odd/odd splits both absorb
  // the split edge, whose copies collapse in the final edge set.
  std::vector<Edge> acc;
  std::vector<std::pair<Graph, std::vector<VertexId>>> work;
  work.emplace_back(cur, identity_map(cur.vertex_count()));
  while (!work.empty()) {
    auto [t, to_host] = std::move(work.back());
    work.pop_back();

    const std::optional<Edge> se = select_edge(t);
    if (!se) {  // star of even order: already all degrees odd
      for (const Edge& e : t.edges()) acc.emplace_back(to_host[e.a], to_host[e.b]);
      continue;
    }

    const std::vector<std::vector<VertexId>> parts = components(t.without_edge(*se));
    const bool a_first = std::binary_search(parts[0].begin(), parts[0].end(), se->a);
    const std::vector<VertexId>& side_a = a_first ? parts[0] : parts[1];
    const std::vector<VertexId>& side_b = a_first ? parts[1] : parts[0];

    std::vector<VertexId> child_a = side_a;
    std::vector<VertexId> child_b = side_b;
    if (side_a.size() % 2 != 0) {
      // Odd/odd: move each endpoint across so both children go even.
      child_a.insert(std::lower_bound(child_a.begin(), child_a.end(), se->b), se->b);
      child_b.insert(std::lower_bound(child_b.begin(), child_b.end(), se->a), se->a);
    }
    for (const std::vector<VertexId>* child : {&child_a, &child_b}) {
      InducedSubgraph sub = induced_subgraph(t, *child);
      std::vector<VertexId> map(sub.to_host.size());
      for (std::size_t i = 0; i < sub.to_host.size(); ++i) map[i] = to_host[sub.to_host[i]];
      work.emplace_back(std::move(sub.graph), std::move(map));
    }
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());

  // Phase 3: replay peeled edges in reverse. An edge rejoining two
  // components leaves the forest perfect; one landing inside a
  // component triggers the cycle repair there.
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const Edge e = *it;
    cur = cur.with_edge(e);
    const std::vector<int> comp = forest_component_ids(cur.vertex_count(), acc);
    if (comp[e.a] != comp[e.b]) continue;

    const int target = comp[e.a];
    std::vector<Edge> inside;
    std::vector<Edge> outside;
    for (const Edge& f : acc) (comp[f.a] == target ? inside : outside).push_back(f);
    std::vector<Edge> repaired = reattach_cycle_fix(inside, e, cur);
    outside.insert(outside.end(), repaired.begin(), repaired.end());
    std::sort(outside.begin(), outside.end());
    acc = std::move(outside);
  }
  return Forest::from_edges(g.vertex_count(), std::move(acc));
}

}  // namespace pforest
