#pragma once

#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

/// Candidate perfect forest over vertices 0..n-1: an acyclic edge subset
/// plus its vertex partition into components (isolated vertices form
/// singleton components). Whether it is actually perfect for a given
/// host graph is the verifier's call.
class Forest {
 public:
  /// Deduplicates, sorts and validates acyclicity.
  static Forest from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted by smallest member; members sorted.
  const std::vector<std::vector<VertexId>>& components() const { return components_; }

  bool operator==(const Forest& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Forest(int n, std::vector<Edge> edges, std::vector<std::vector<VertexId>> components);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> components_;
};

}  // namespace pforest
