#include "pforest/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "pforest/rng.hpp"

namespace pforest {

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "random_tree") return Family::random_tree;
  if (name == "random_connected") return Family::random_connected;
  return std::nullopt;
}

Graph pruefer_decode(const std::vector<VertexId>& sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  for (const VertexId s : sequence)
    if (s < 0 || s >= n) throw std::invalid_argument("sequence entry out of range");

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (const VertexId s : sequence) ++degree[s];

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  VertexId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  for (const VertexId s : sequence) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;  // s became the smallest leaf; ptr stays put
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edge_set(n, std::move(edges));
}

namespace {

std::vector<VertexId> random_sequence(int n, SplitMix64& rng) {
  std::vector<VertexId> seq(static_cast<std::size_t>(n) - 2);
  for (VertexId& s : seq) s = static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(n)));
  return seq;
}

}  // namespace

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random tree needs n >= 2");
  SplitMix64 rng(seed);
  return pruefer_decode(random_sequence(n, rng));
}

Graph random_connected(int n, long long m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random connected graph needs n >= 2");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw std::invalid_argument("edge count out of range [n-1, n(n-1)/2]");

  SplitMix64 rng(seed);
  const Graph tree = pruefer_decode(random_sequence(n, rng));
  std::vector<Edge> edges = tree.edges();
  const long long extra = m - (n - 1);
  if (extra == 0) return tree;

  auto key = [](Edge e) {
    return (static_cast<std::uint64_t>(e.a) << 32) | static_cast<std::uint32_t>(e.b);
  };
  std::unordered_set<std::uint64_t> used;
  for (const Edge& e : edges) used.insert(key(e));

  const long long pool = max_m - (n - 1);
  if (extra * 3 <= pool) {
    // Sparse: rejection sampling stays cheap.
    while (static_cast<long long>(edges.size()) < m) {
      const auto u = static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(n)));
      if (u == v) continue;
      const Edge e(u, v);
      if (used.insert(key(e)).second) edges.push_back(e);
    }
  } else {
    // Dense: draw from the materialized complement without replacement.
    std::vector<Edge> candidates;
    candidates.reserve(static_cast<std::size_t>(pool));
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!used.contains(key(Edge(u, v)))) candidates.emplace_back(u, v);
    for (long long i = 0; i < extra; ++i) {
      const auto j = i + static_cast<long long>(
                             rng.next_below(static_cast<std::uint64_t>(candidates.size() - i)));
      std::swap(candidates[i], candidates[j]);
      edges.push_back(candidates[i]);
    }
  }
  return Graph::from_edge_set(n, std::move(edges));
}

Graph named_graph(Family family, int n, std::optional<int> k) {
  std::vector<Edge> edges;
  switch (family) {
    case Family::path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::star:
      // Center at the highest id.
      if (n < 2) throw std::invalid_argument("star needs n >= 2");
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, n - 1);
      break;
    case Family::complete_bipartite: {
      if (!k) throw std::invalid_argument("complete_bipartite needs a part size k");
      if (*k < 1 || *k >= n) throw std::invalid_argument("part size k out of range [1, n-1]");
      for (VertexId u = 0; u < *k; ++u)
        for (VertexId v = *k; v < n; ++v) edges.emplace_back(u, v);
      break;
    }
    case Family::random_tree:
    case Family::random_connected:
      throw std::invalid_argument("random families need a seed; use generate()");
  }
  return Graph::from_edge_set(n, std::move(edges));
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::random_tree:
      return random_tree(spec.n, spec.seed);
    case Family::random_connected:
      if (!spec.m) throw std::invalid_argument("random_connected needs an edge count m");
      return random_connected(spec.n, *spec.m, spec.seed);
    default:
      return named_graph(spec.family, spec.n, spec.k);
  }
}

}  // namespace pforest
