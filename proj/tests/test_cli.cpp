#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CmdResult {
  int status = -1;
  std::string output;
};

// Runs a shell command and captures one stream.
CmdResult run_cmd(const std::string& command) {
  CmdResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string cli() { return std::string("\"") + PF_CLI_PATH + "\""; }

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() /
                    (name + "." + std::to_string(getpid()) + ".txt");
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("gen prints canonical edge lists") {
  const CmdResult path4 = run_cmd(cli() + " gen --family path --n 4");
  CHECK(path4.status == 0);
  CHECK(path4.output == "0 1\n1 2\n2 3\n");

  const CmdResult bip = run_cmd(cli() + " gen --family complete_bipartite --n 4");
  CHECK(bip.status == 0);
  CHECK(bip.output == "0 2\n0 3\n1 2\n1 3\n");

  // --m belongs to random_connected only.
  const CmdResult misuse = run_cmd(cli() + " gen --family path --n 4 --m 5 2>/dev/null");
  CHECK(misuse.status == 2);

  const CmdResult too_small = run_cmd(cli() + " gen --family cycle --n 2 2>/dev/null");
  CHECK(too_small.status == 1);
}

TEST_CASE("find on a path of four vertices") {
  const auto p4 = write_temp("pforest_p4", "0 1\n1 2\n2 3\n");

  for (const std::string algo : {"split", "edge"}) {
    const CmdResult r =
        run_cmd(cli() + " find " + p4.string() + " --algo " + algo + " --verify");
    CHECK(r.status == 0);
    CHECK(r.output == "0 1\n2 3\n# component: 0 1\n# component: 2 3\n");
  }

  const CmdResult dot =
      run_cmd(cli() + " find " + p4.string() + " --algo split --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.output.find("style=solid") != std::string::npos);

  std::filesystem::remove(p4);
}

TEST_CASE("find rejects odd order with a diagnostic") {
  const auto p5 = write_temp("pforest_p5", "0 1\n1 2\n2 3\n3 4\n");
  const CmdResult r =
      run_cmd(cli() + " find " + p5.string() + " --algo edge 2>&1 1>/dev/null");
  CHECK(r.status == 1);
  CHECK(r.output.find("odd number of vertices") != std::string::npos);
  std::filesystem::remove(p5);
}

TEST_CASE("find output is byte-identical across runs") {
  const CmdResult gen =
      run_cmd(cli() + " gen --family random_connected --n 20 --m 45 --seed 7");
  REQUIRE(gen.status == 0);
  const auto file = write_temp("pforest_rand", gen.output);

  for (const std::string args : {" --algo split", " --algo edge --format dot"}) {
    const CmdResult first = run_cmd(cli() + " find " + file.string() + args);
    const CmdResult second = run_cmd(cli() + " find " + file.string() + args);
    CHECK(first.status == 0);
    CHECK(first.output == second.output);
  }
  std::filesystem::remove(file);
}

TEST_CASE("usage and domain errors map to exit codes") {
  CHECK(run_cmd(cli() + " 2>/dev/null").status == 2);
  CHECK(run_cmd(cli() + " frobnicate 2>/dev/null").status == 2);
  CHECK(run_cmd(cli() + " find 2>/dev/null").status == 2);
  CHECK(run_cmd(cli() + " find missing.txt --algo split --algo wrong 2>/dev/null").status == 2);
  CHECK(run_cmd(cli() + " find /nonexistent/file.txt --algo split 2>/dev/null").status == 1);
  CHECK(run_cmd(cli() + " --help").status == 0);
}

TEST_CASE("oracle subcommand emits json") {
  const auto p4 = write_temp("pforest_oracle_p4", "0 1\n1 2\n2 3\n");
  const CmdResult r = run_cmd(cli() + " oracle " + p4.string());
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["count"] == 1);
  CHECK(j["subsets_scanned"] == 8);
  CHECK(j["forests"].size() == 1);
  std::filesystem::remove(p4);
}

TEST_CASE("selftest sweeps small orders") {
  const CmdResult r = run_cmd(cli() + " selftest --max-n 4");
  CHECK(r.status == 0);
  CHECK(r.output.find("n=2: 1 graphs") != std::string::npos);
  CHECK(r.output.find("n=4: 38 graphs") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);

  CHECK(run_cmd(cli() + " selftest --max-n 5 2>/dev/null").status == 2);
}

TEST_CASE("bench reports verified cases") {
  const CmdResult r = run_cmd(cli() + " bench --sizes 4:5,6:9 --reps 2 --seed 3");
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["cases"].size() == 8);  // 2 sizes x 2 reps x 2 algorithms
  for (const auto& c : j["cases"]) CHECK(c["verified"] == true);
  CHECK(j["medians"].size() == 4);

  CHECK(run_cmd(cli() + " bench --sizes 5:6 --reps 1 2>/dev/null").status == 1);  // odd n
}
