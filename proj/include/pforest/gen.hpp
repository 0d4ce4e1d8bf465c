#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pforest/graph.hpp"

namespace pforest {

enum class Family {
  path,
  cycle,
  complete,
  star,
  complete_bipartite,
  random_tree,
  random_connected,
};

std::optional<Family> family_from_string(const std::string& name);

/// Generator request as taken by the CLI.
struct GenSpec {
  Family family = Family::path;
  int n = 0;
  std::optional<long long> m;  // random_connected only
  std::optional<int> k;        // complete_bipartite only
  std::uint64_t seed = 1;
};

/// Labeled tree from a sequence over 0..n-1 with n = len+2 (n >= 2).
Graph pruefer_decode(const std::vector<VertexId>& sequence);

/// Uniform random labeled tree on n >= 2 vertices, via a random
/// sequence of length n-2. Deterministic per seed.
Graph random_tree(int n, std::uint64_t seed);

/// random_tree(n, seed) plus m-(n-1) distinct extra edges sampled
/// uniformly without replacement. Connected by construction.
Graph random_connected(int n, long long m, std::uint64_t seed);

/// Canonical labeled instance of a fixed family. Star centers sit at
/// the highest id; complete_bipartite parts are {0..k-1} and {k..n-1}.
Graph named_graph(Family family, int n, std::optional<int> k = std::nullopt);

/// Dispatch on GenSpec.
Graph generate(const GenSpec& spec);

}  // namespace pforest
