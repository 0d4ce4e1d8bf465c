#include "pforest/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "pforest/gen.hpp"
#include "pforest/perfect_forest.hpp"
#include "pforest/rng.hpp"
#include "pforest/verify.hpp"

namespace pforest {

BenchReport run_bench(const std::vector<std::pair<int, long long>>& sizes, int reps,
                      std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  for (const auto& [n, m] : sizes) {
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("benchmark sizes need an even n >= 2");
    if (m < n - 1 || m > static_cast<long long>(n) * (n - 1) / 2)
      throw std::invalid_argument("edge count out of range for n=" + std::to_string(n));
  }

  BenchReport report;
  SplitMix64 seeder(seed);
  for (const auto& [n, m] : sizes) {
    std::vector<double> split_times;
    std::vector<double> edge_times;
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t graph_seed = seeder.next();
      const Graph g = random_connected(n, m, graph_seed);
      for (const bool use_split : {true, false}) {
        const auto start = std::chrono::steady_clock::now();
        const Forest forest = use_split ? perfect_forest_split(g) : perfect_forest_edge(g);
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

        const Verdict verdict = verify_perfect_forest(g, forest.edges());
        if (!verdict.valid)
          throw std::runtime_error("verification failed for " +
                                   std::string(use_split ? "split" : "edge") +
                                   " at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                   " seed=" + std::to_string(graph_seed) + ": " +
                                   to_string(verdict.violations.front()));

        report.cases.push_back({use_split ? "split" : "edge", n, m, graph_seed, ms,
                                static_cast<int>(forest.components().size()), true});
        (use_split ? split_times : edge_times).push_back(ms);
      }
    }
    for (const bool use_split : {true, false}) {
      std::vector<double>& times = use_split ? split_times : edge_times;
      std::sort(times.begin(), times.end());
      const std::size_t mid = times.size() / 2;
      const double median =
          times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
      report.medians.push_back({use_split ? "split" : "edge", n, m, median});
    }
  }
  return report;
}

}  // namespace pforest
