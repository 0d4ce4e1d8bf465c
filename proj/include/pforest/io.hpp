#pragma once

#include <string>
#include <string_view>

#include "pforest/bench.hpp"
#include "pforest/forest.hpp"
#include "pforest/graph.hpp"
#include "pforest/oracle.hpp"

namespace pforest {

/// Parses "u v" lines (ASCII decimal). Lines starting with '#' and
/// blank lines are skipped; n is inferred as 1 + max vertex id.
Graph parse_edge_list(std::string_view text);

/// One "u v" line per edge, lexicographic order.
std::string write_edge_list(const Graph& g);

enum class ForestFormat { edges, dot };

/// `edges`: forest edges in lexicographic order, then one
/// "# component: ..." line per component. `dot`: all host edges, forest
/// edges solid and the rest dashed.
std::string write_forest(const Graph& host, const Forest& forest, ForestFormat format);

std::string to_json(const OracleReport& report);
std::string to_json(const BenchReport& report);

}  // namespace pforest
