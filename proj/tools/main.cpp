#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pforest/bench.hpp"
#include "pforest/gen.hpp"
#include "pforest/io.hpp"
#include "pforest/oracle.hpp"
#include "pforest/perfect_forest.hpp"
#include "pforest/verify.hpp"

namespace {

pforest::Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return pforest::parse_edge_list(buffer.str());
}

int cmd_find(const std::string& file, const std::string& algo, const std::string& format,
             bool verify) {
  const pforest::Graph g = load_graph(file);
  const pforest::Forest forest =
      algo == "split" ? pforest::perfect_forest_split(g) : pforest::perfect_forest_edge(g);
  if (verify) {
    const pforest::Verdict verdict = pforest::verify_perfect_forest(g, forest.edges());
    if (!verdict.valid) {
      std::cerr << "error: output failed verification: "
                << pforest::to_string(verdict.violations.front()) << "\n";
      return 1;
    }
  }
  std::cout << pforest::write_forest(
      g, forest, format == "dot" ? pforest::ForestFormat::dot : pforest::ForestFormat::edges);
  return 0;
}

int cmd_oracle(const std::string& file, std::size_t cap) {
  const pforest::Graph g = load_graph(file);
  std::cout << pforest::to_json(pforest::enumerate_perfect_forests(g, cap));
  return 0;
}

int cmd_gen(const pforest::GenSpec& spec) {
  std::cout << pforest::write_edge_list(pforest::generate(spec));
  return 0;
}

int cmd_selftest(int max_n) {
  bool ok = true;
  for (int n = 2; n <= max_n; n += 2) {
    const pforest::SelfcheckSummary s = pforest::exhaustive_selfcheck(n);
    std::cout << "n=" << n << ": " << s.connected_graphs << " graphs, " << s.checked
              << " checked, " << s.failures() << " failures\n";
    ok = ok && s.failures() == 0;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

std::vector<std::pair<int, long long>> parse_sizes(const std::string& text) {
  std::vector<std::pair<int, long long>> sizes;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("size '" + item + "' is not of the form n:m");
    sizes.emplace_back(std::stoi(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
  }
  if (sizes.empty()) throw std::invalid_argument("no benchmark sizes given");
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect forest construction toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string algo;
  std::string format = "edges";
  bool verify = false;
  auto* find = app.add_subcommand("find", "find a perfect forest in an edge-list file");
  find->add_option("file", file, "edge-list file")->required();
  find->add_option("--algo", algo, "construction to run")
      ->required()
      ->check(CLI::IsMember({"split", "edge"}));
  find->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"edges", "dot"}));
  find->add_flag("--verify", verify, "verify the output before printing");

  std::string oracle_file;
  std::size_t cap = 64;
  auto* oracle = app.add_subcommand("oracle", "enumerate all perfect forests (m <= 24)");
  oracle->add_option("file", oracle_file, "edge-list file")->required();
  oracle->add_option("--cap", cap, "list forests only while count <= cap");

  std::string family_name;
  int gen_n = 0;
  std::optional<long long> gen_m;
  std::optional<int> gen_k;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "print a generated graph as an edge list");
  gen->add_option("--family", family_name, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "complete_bipartite",
                             "random_tree", "random_connected"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edge count (random_connected only)");
  gen->add_option("--k", gen_k, "first part size (complete_bipartite only, default n/2)");
  gen->add_option("--seed", gen_seed, "generator seed");

  int max_n = 6;
  auto* selftest = app.add_subcommand("selftest", "exhaustive check over small graphs");
  selftest->add_option("--max-n", max_n, "largest order to sweep")
      ->check(CLI::IsMember({2, 4, 6}));

  std::string sizes_text;
  int reps = 3;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time both algorithms on random graphs");
  bench->add_option("--sizes", sizes_text, "comma-separated n:m pairs")->required();
  bench->add_option("--reps", reps, "repetitions per size");
  bench->add_option("--seed", bench_seed, "seed for the graph sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (find->parsed()) return cmd_find(file, algo, format, verify);
    if (oracle->parsed()) return cmd_oracle(oracle_file, cap);
    if (gen->parsed()) {
      pforest::GenSpec spec;
      spec.family = *pforest::family_from_string(family_name);
      spec.n = gen_n;
      spec.seed = gen_seed;
      if (gen_m) {
        if (spec.family != pforest::Family::random_connected) {
          std::cerr << "error: --m only applies to random_connected\n";
          return 2;
        }
        spec.m = gen_m;
      }
      if (gen_k) {
        if (spec.family != pforest::Family::complete_bipartite) {
          std::cerr << "error: --k only applies to complete_bipartite\n";
          return 2;
        }
        spec.k = gen_k;
      } else if (spec.family == pforest::Family::complete_bipartite) {
        spec.k = gen_n / 2;
      }
      return cmd_gen(spec);
    }
    if (selftest->parsed()) return cmd_selftest(max_n);
    if (bench->parsed()) {
      std::cout << pforest::to_json(pforest::run_bench(parse_sizes(sizes_text), reps, bench_seed));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
