#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "pebbling/bounds.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/strategy.hpp"
#include "pebbling/treepi.hpp"

namespace pebbling::io {

using nlohmann::json;

// Edge-list text: "n m\n" then m lines "u v\n", edges with u < v in
// lexicographic order on write.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& text);
Graph load_graph(const std::string& path);

// Configuration text: "v:count" pairs, ascending vertices, zeros omitted,
// comma separated; the empty string is the empty configuration.
std::string format_configuration(const Configuration& c);
Configuration parse_configuration(const std::string& text, int n);

// Strategy-set JSON: {"root": r, "strategies": [{"parent": {"v": p},
// "weight": {"v": w}}]}. Missing weights are derived from tree depth.
json strategy_set_to_json(const StrategySet& set);
StrategySet strategy_set_from_json(const Graph& g, const json& doc);
StrategySet load_strategy_set(const Graph& g, const std::string& path);

json solve_report(const SolveResult& result, double elapsed_ms);

json bound_entry(const BoundReport& report);
json bound_report(const std::string& descriptor, const GraphBounds& bounds);
/// Single-root report; overall_bound is the bound selected by `method`.
json bound_report(const std::string& descriptor, const BoundReport& report,
                  BoundMethod method);

json partition_to_json(const PathPartition& partition);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace pebbling::io
