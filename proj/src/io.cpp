#include "pforest/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pforest {

namespace {

constexpr long long kMaxVertexId = 10'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long long parse_vertex(std::string_view token, int line_number) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw std::invalid_argument("malformed vertex token '" + std::string(token) + "' on line " +
                                std::to_string(line_number));
  if (value > kMaxVertexId)
    throw std::invalid_argument("vertex id " + std::string(token) + " out of supported range");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  long long max_id = -1;

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos)
      throw std::invalid_argument("expected 'u v' on line " + std::to_string(line_number));
    const std::string_view first = line.substr(0, gap);
    const std::string_view second = trim(line.substr(gap));
    if (second.find_first_of(" \t") != std::string_view::npos)
      throw std::invalid_argument("expected 'u v' on line " + std::to_string(line_number));

    const long long u = parse_vertex(first, line_number);
    const long long v = parse_vertex(second, line_number);
    pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    max_id = std::max({max_id, u, v});
  }

  if (pairs.empty()) throw std::invalid_argument("empty edge list");
  return Graph::from_edges(static_cast<int>(max_id) + 1, pairs);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.a << " " << e.b << "\n";
  return out.str();
}

std::string write_forest(const Graph& host, const Forest& forest, ForestFormat format) {
  std::ostringstream out;
  if (format == ForestFormat::edges) {
    for (const Edge& e : forest.edges()) out << e.a << " " << e.b << "\n";
    for (const auto& comp : forest.components()) {
      out << "# component:";
      for (const VertexId v : comp) out << " " << v;
      out << "\n";
    }
    return out.str();
  }

  const auto& fe = forest.edges();
  out << "graph perfect_forest {\n";
  for (const Edge& e : host.edges()) {
    const bool in_forest = std::binary_search(fe.begin(), fe.end(), e);
    out << "  " << e.a << " -- " << e.b << (in_forest ? " [style=solid];" : " [style=dashed];")
        << "\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  nlohmann::json list = nlohmann::json::array();
  for (const Edge& e : edges) list.push_back({e.a, e.b});
  return list;
}

}  // namespace

std::string to_json(const OracleReport& report) {
  nlohmann::json j;
  j["count"] = report.count;
  j["subsets_scanned"] = report.subsets_scanned;
  if (report.forests_listed) {
    nlohmann::json forests = nlohmann::json::array();
    for (const auto& f : report.forests) forests.push_back(edges_to_json(f));
    j["forests"] = forests;
  }
  return j.dump(2) + "\n";
}

std::string to_json(const BenchReport& report) {
  nlohmann::json j;
  j["cases"] = nlohmann::json::array();
  for (const BenchCase& c : report.cases) {
    j["cases"].push_back({{"algorithm", c.algorithm},
                          {"n", c.n},
                          {"m", c.m},
                          {"seed", c.seed},
                          {"wall_time_ms", c.wall_time_ms},
                          {"forest_component_count", c.forest_component_count},
                          {"verified", c.verified}});
  }
  j["medians"] = nlohmann::json::array();
  for (const BenchAggregate& a : report.medians) {
    j["medians"].push_back({{"algorithm", a.algorithm},
                            {"n", a.n},
                            {"m", a.m},
                            {"median_wall_time_ms", a.median_wall_time_ms}});
  }
  return j.dump(2) + "\n";
}

}  // namespace pforest
