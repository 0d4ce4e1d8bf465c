#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pforest {

struct BenchCase {
  std::string algorithm;  // "split" or "edge"
  int n = 0;
  long long m = 0;
  std::uint64_t seed = 0;  // seed the graph was generated from
  double wall_time_ms = 0.0;
  int forest_component_count = 0;
  bool verified = false;
};

struct BenchAggregate {
  std::string algorithm;
  int n = 0;
  long long m = 0;
  double median_wall_time_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchCase> cases;
  std::vector<BenchAggregate> medians;  // per (algorithm, size)
};

/// Times both algorithms on random_connected graphs, reps per size.
/// Every output is verified before its timing is recorded; a
/// verification failure aborts the run. The graph sequence is a pure
/// function of seed.
BenchReport run_bench(const std::vector<std::pair<int, long long>>& sizes, int reps,
                      std::uint64_t seed);

}  // namespace pforest
