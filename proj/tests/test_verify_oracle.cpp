#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "pforest/gen.hpp"
#include "pforest/oracle.hpp"
#include "pforest/perfect_forest.hpp"
#include "pforest/rng.hpp"
#include "pforest/verify.hpp"

#include "test_util.hpp"

using namespace pforest;
using pftest::edge_list;
using pftest::make_graph;

namespace {

bool has_violation(const Verdict& verdict, Rule rule, VertexId vertex) {
  return std::any_of(verdict.violations.begin(), verdict.violations.end(),
                     [&](const Violation& v) {
                       return v.rule == rule && std::holds_alternative<VertexId>(v.witness) &&
                              std::get<VertexId>(v.witness) == vertex;
                     });
}

bool has_rule(const Verdict& verdict, Rule rule) {
  return std::any_of(verdict.violations.begin(), verdict.violations.end(),
                     [rule](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("verifier examples") {
  const Graph c4 = named_graph(Family::cycle, 4);

  const Verdict good = verify_perfect_forest(c4, edge_list({{0, 1}, {2, 3}}));
  CHECK(good.valid);
  CHECK(good.violations.empty());

  const Verdict path = verify_perfect_forest(c4, edge_list({{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(path.valid);
  CHECK(has_violation(path, Rule::EvenDegree, 1));
  CHECK(has_violation(path, Rule::EvenDegree, 2));

  // The all-odd spanning star of K4 misses host edges inside its one
  // component.
  const Graph k4 = named_graph(Family::complete, 4);
  const Verdict star = verify_perfect_forest(k4, edge_list({{0, 1}, {0, 2}, {0, 3}}));
  CHECK_FALSE(star.valid);
  REQUIRE(star.violations.size() == 1);
  CHECK(star.violations[0].rule == Rule::NotInduced);
  CHECK(std::get<std::vector<VertexId>>(star.violations[0].witness) ==
        std::vector<VertexId>{0, 1, 2, 3});

  const Graph p4 = named_graph(Family::path, 4);
  const Verdict uncovered = verify_perfect_forest(p4, edge_list({{0, 1}}));
  CHECK_FALSE(uncovered.valid);
  CHECK(has_violation(uncovered, Rule::EvenDegree, 2));
  CHECK(has_violation(uncovered, Rule::EvenDegree, 3));
  CHECK(has_violation(uncovered, Rule::NotSpanning, 2));
  CHECK(has_violation(uncovered, Rule::NotSpanning, 3));
}

TEST_CASE("verifier tolerates garbage") {
  const Graph c4 = named_graph(Family::cycle, 4);

  const Verdict foreign = verify_perfect_forest(c4, edge_list({{0, 9}, {0, 1}, {2, 3}}));
  CHECK_FALSE(foreign.valid);
  CHECK(has_rule(foreign, Rule::NotSubgraph));

  // Duplicates collapse to set semantics.
  CHECK(verify_perfect_forest(c4, edge_list({{0, 1}, {0, 1}, {2, 3}})).valid);

  const Graph k4 = named_graph(Family::complete, 4);
  const Verdict cyclic = verify_perfect_forest(k4, edge_list({{0, 1}, {0, 2}, {1, 2}}));
  CHECK_FALSE(cyclic.valid);
  CHECK(has_rule(cyclic, Rule::HasCycle));
}

TEST_CASE("oracle ground truths") {
  const OracleReport p4 = enumerate_perfect_forests(named_graph(Family::path, 4), 64);
  CHECK(p4.count == 1);
  CHECK(p4.subsets_scanned == 8);
  REQUIRE(p4.forests_listed);
  CHECK(p4.forests == std::vector<std::vector<Edge>>{edge_list({{0, 1}, {2, 3}})});

  const OracleReport c4 = enumerate_perfect_forests(named_graph(Family::cycle, 4), 64);
  CHECK(c4.count == 2);
  CHECK(c4.subsets_scanned == 16);
  CHECK(c4.forests == std::vector<std::vector<Edge>>{edge_list({{0, 1}, {2, 3}}),
                                                     edge_list({{0, 3}, {1, 2}})});

  const OracleReport k4 = enumerate_perfect_forests(named_graph(Family::complete, 4), 64);
  CHECK(k4.count == 3);
  CHECK(k4.subsets_scanned == 64);
  CHECK(k4.forests == std::vector<std::vector<Edge>>{edge_list({{0, 1}, {2, 3}}),
                                                     edge_list({{0, 2}, {1, 3}}),
                                                     edge_list({{0, 3}, {1, 2}})});

  // Odd order: no perfect forest at all.
  CHECK(enumerate_perfect_forests(named_graph(Family::path, 3), 64).count == 0);
  CHECK(enumerate_perfect_forests(named_graph(Family::cycle, 5), 64).count == 0);
}

TEST_CASE("oracle cap and guard") {
  const OracleReport capped = enumerate_perfect_forests(named_graph(Family::cycle, 4), 1);
  CHECK(capped.count == 2);
  CHECK_FALSE(capped.forests_listed);
  CHECK(capped.forests.empty());

  // K8 has 28 edges.
  CHECK_THROWS_AS(enumerate_perfect_forests(named_graph(Family::complete, 8), 64),
                  std::invalid_argument);
}

TEST_CASE("every listed forest verifies") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_connected(6, 6 + static_cast<long long>(rng.next_below(7)),
                                     rng.next());
    const OracleReport report = enumerate_perfect_forests(g, 4096);
    REQUIRE(report.forests_listed);
    CHECK(report.count == report.forests.size());
    for (const auto& forest : report.forests) CHECK(verify_perfect_forest(g, forest).valid);
  }
}

TEST_CASE("oracle count is invariant under relabeling") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6;
    const Graph g = random_connected(n, 8, rng.next());

    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[i], perm[j]);
    }
    std::vector<std::pair<VertexId, VertexId>> relabeled;
    for (const Edge& e : g.edges()) relabeled.emplace_back(perm[e.a], perm[e.b]);
    const Graph h = Graph::from_edges(n, relabeled);

    CHECK(enumerate_perfect_forests(g, 0).count == enumerate_perfect_forests(h, 0).count);
  }
}

TEST_CASE("an all-odd tree is its own unique perfect forest") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph tree = pftest::random_odd_tree(
        4 + 2 * static_cast<int>(rng.next_below(5)), rng);
    const OracleReport report = enumerate_perfect_forests(tree, 4);
    CHECK(report.count == 1);
    REQUIRE(report.forests_listed);
    CHECK(report.forests[0] == tree.edges());
  }
}

TEST_CASE("exhaustive selfcheck at n=2 and n=4") {
  const SelfcheckSummary two = exhaustive_selfcheck(2);
  CHECK(two.connected_graphs == 1);
  CHECK(two.checked == 1);
  CHECK(two.failures() == 0);

  const SelfcheckSummary four = exhaustive_selfcheck(4);
  CHECK(four.connected_graphs == 38);
  CHECK(four.checked == 38);
  CHECK(four.failures() == 0);

  CHECK_THROWS_AS(exhaustive_selfcheck(3), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_selfcheck(8), std::invalid_argument);
}
