#include "pforest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pforest/forest.hpp"
#include "pforest/perfect_forest.hpp"
#include "pforest/verify.hpp"

namespace pforest {

OracleReport enumerate_perfect_forests(const Graph& g, std::size_t cap) {
  const int m = g.edge_count();
  if (m > 24) throw std::invalid_argument("enumeration is guarded at m <= 24");

  OracleReport report;
  report.subsets_scanned = std::uint64_t{1} << m;

  // A vertex no edge can reach never gets odd degree.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      report.forests_listed = true;
      return report;
    }
  }

  // With every vertex covered, n <= 2m <= 48 and degree parities fit in
  // one word: subsets failing the all-odd parity test are EvenDegree
  // rejections, the rest go through the full verifier.
  const int n = g.vertex_count();
  std::vector<std::uint64_t> touch(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    touch[i] = (std::uint64_t{1} << g.edges()[i].a) | (std::uint64_t{1} << g.edges()[i].b);
  const std::uint64_t all_odd = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<Edge> subset;
  for (std::uint64_t mask = 0; mask < report.subsets_scanned; ++mask) {
    std::uint64_t parity = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1)
      parity ^= touch[std::countr_zero(bits)];
    if (parity != all_odd) continue;

    subset.clear();
    for (std::uint64_t bits = mask; bits; bits &= bits - 1)
      subset.push_back(g.edges()[std::countr_zero(bits)]);
    if (!verify_perfect_forest(g, subset).valid) continue;

    ++report.count;
    if (report.count <= cap) report.forests.push_back(subset);
  }

  report.forests_listed = report.count <= cap;
  if (!report.forests_listed)
    report.forests.clear();
  else
    std::sort(report.forests.begin(), report.forests.end());
  return report;
}

SelfcheckSummary exhaustive_selfcheck(int n) {
  if (n != 2 && n != 4 && n != 6)
    throw std::invalid_argument("selfcheck supports n in {2, 4, 6}");

  std::vector<std::pair<VertexId, VertexId>> all_pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  const int max_m = static_cast<int>(all_pairs.size());

  // Perfect forests are all-odd subsets, so a connected graph has at
  // most 2^(m-n+1) of them; this cap always lists the full set.
  const std::size_t cap = std::size_t{1} << (max_m - n + 1);

  SelfcheckSummary summary;
  summary.n = n;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << max_m); ++mask) {
    pairs.clear();
    for (std::uint64_t bits = mask; bits; bits &= bits - 1)
      pairs.push_back(all_pairs[std::countr_zero(bits)]);
    const Graph g = Graph::from_edges(n, pairs);
    if (!is_connected(g)) continue;
    ++summary.connected_graphs;

    const OracleReport oracle = enumerate_perfect_forests(g, cap);
    if (oracle.count < 1) ++summary.oracle_failures;

    for (const bool use_split : {true, false}) {
      const Forest forest = use_split ? perfect_forest_split(g) : perfect_forest_edge(g);
      const bool valid = verify_perfect_forest(g, forest.edges()).valid;
      const bool listed =
          std::binary_search(oracle.forests.begin(), oracle.forests.end(), forest.edges());
      if (!valid || !listed) ++summary.algorithm_failures;
    }
    ++summary.checked;
  }
  return summary;
}

}  // namespace pforest
