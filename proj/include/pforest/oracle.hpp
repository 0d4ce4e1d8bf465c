#pragma once

#include <cstdint>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

/// Result of a full scan over all 2^m edge subsets.
struct OracleReport {
  std::uint64_t count = 0;            // perfect forests found
  std::uint64_t subsets_scanned = 0;  // always 2^m
  bool forests_listed = false;        // true iff count <= cap
  std::vector<std::vector<Edge>> forests;  // lexicographic edge-set order
};

/// Brute-force enumeration of every perfect forest of g. Guarded at
/// m <= 24 (about 16M subsets). The forests themselves are listed only
/// while the count stays within cap.
OracleReport enumerate_perfect_forests(const Graph& g, std::size_t cap);

struct SelfcheckSummary {
  int n = 0;
  std::uint64_t connected_graphs = 0;
  std::uint64_t checked = 0;
  std::uint64_t oracle_failures = 0;     // connected graphs with no perfect forest
  std::uint64_t algorithm_failures = 0;  // outputs failing the verifier or absent from the oracle set
  std::uint64_t failures() const { return oracle_failures + algorithm_failures; }
};

/// Exhaustive check over every labeled graph on n vertices (n in
/// {2, 4, 6}): each connected one must have an enumerable perfect
/// forest, and both construction algorithms must produce a member of
/// the enumerated set.
SelfcheckSummary exhaustive_selfcheck(int n);

}  // namespace pforest
