#include "pebbling/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pebbling/error.hpp"

namespace pebbling::io {

namespace {

/// Parses a non-negative decimal integer occupying all of `token`.
bool parse_int(std::string_view token, int& out) {
  if (token.empty() || token.front() == '+' || token.front() == '-') return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

/// Splits "a b" on exactly one space.
bool parse_pair(const std::string& line, int& a, int& b) {
  const auto space = line.find(' ');
  if (space == std::string::npos) return false;
  return parse_int(std::string_view(line).substr(0, space), a) &&
         parse_int(std::string_view(line).substr(space + 1), b);
}

int line_of_offset(const std::string& text, std::size_t offset) {
  const auto end = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(end), '\n'));
}

}  // namespace

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing header 'n m'", 1);
  int n = 0;
  int m = 0;
  if (!parse_pair(line, n, m)) throw ParseError("header must be 'n m'", line_no);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                           std::to_string(i),
                       line_no);
    }
    int u = 0;
    int v = 0;
    if (!parse_pair(line, u, v)) throw ParseError("edge must be 'u v'", line_no);
    if (u >= n || v >= n) throw ParseError("vertex id out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    edges.emplace_back(u, v);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw ParseError("unexpected content after the edges", line_no);
  }
  return Graph(n, edges);
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

Graph load_graph(const std::string& path) { return read_edge_list(read_file(path)); }

std::string format_configuration(const Configuration& c) {
  std::string out;
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(v) + ':' + std::to_string(c[v]);
  }
  return out;
}

Configuration parse_configuration(const std::string& text, int n) {
  Configuration c(n);
  if (text.empty()) return c;
  std::size_t pos = 0;
  int previous = -1;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const auto colon = item.find(':');
    int v = 0;
    int count = 0;
    if (colon == std::string::npos ||
        !parse_int(std::string_view(item).substr(0, colon), v) ||
        !parse_int(std::string_view(item).substr(colon + 1), count)) {
      throw ParseError("configuration entry '" + item + "' must be 'vertex:count'");
    }
    if (v >= n) {
      throw ParseError("configuration vertex " + std::to_string(v) +
                       " outside a graph on " + std::to_string(n) + " vertices");
    }
    if (v <= previous) throw ParseError("configuration vertices must ascend");
    previous = v;
    c[v] = count;
    pos = comma + 1;
  }
  return c;
}

json strategy_set_to_json(const StrategySet& set) {
  json strategies = json::array();
  for (const auto& s : set.strategies()) {
    json parent = json::object();
    json weight = json::object();
    for (const auto& [v, p] : s.parent()) parent[std::to_string(v)] = p;
    for (const auto& [v, w] : s.weight()) weight[std::to_string(v)] = w;
    strategies.push_back({{"parent", parent}, {"weight", weight}});
  }
  return {{"root", set.root()}, {"strategies", strategies}};
}

StrategySet strategy_set_from_json(const Graph& g, const json& doc) {
  auto vertex_key = [](const std::string& key) {
    int v = 0;
    if (!parse_int(key, v)) throw ParseError("'" + key + "' is not a vertex id");
    return v;
  };
  if (!doc.is_object() || !doc.contains("root") || !doc.at("root").is_number_integer() ||
      !doc.contains("strategies") || !doc.at("strategies").is_array()) {
    throw ParseError("strategy file needs an integer 'root' and a 'strategies' array");
  }
  const Vertex root = doc.at("root").get<int>();
  require_vertex(g, root, "root");
  std::vector<Strategy> strategies;
  int index = 0;
  for (const auto& entry : doc.at("strategies")) {
    const std::string where = "strategy " + std::to_string(index++) + ": ";
    if (!entry.is_object() || !entry.contains("parent") || !entry.at("parent").is_object()) {
      throw ParseError(where + "missing 'parent' object");
    }
    std::map<Vertex, Vertex> parent;
    for (const auto& [key, value] : entry.at("parent").items()) {
      if (!value.is_number_integer()) throw ParseError(where + "parent values must be integers");
      parent[vertex_key(key)] = value.get<int>();
    }
    try {
      if (!entry.contains("weight")) {
        strategies.push_back(strategy_from_tree(g, root, parent));
        continue;
      }
      if (!entry.at("weight").is_object()) throw ParseError(where + "'weight' must be an object");
      std::map<Vertex, std::int64_t> weight;
      for (const auto& [key, value] : entry.at("weight").items()) {
        if (!value.is_number_integer()) throw ParseError(where + "weights must be integers");
        weight[vertex_key(key)] = value.get<std::int64_t>();
      }
      Strategy s(root, std::move(parent), std::move(weight));
      if (auto diag = validate_strategy(g, s); !diag) {
        throw ParseError(where + diag.rule + ": " + diag.message);
      }
      strategies.push_back(std::move(s));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
  }
  try {
    return StrategySet(root, std::move(strategies));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

StrategySet load_strategy_set(const Graph& g, const std::string& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte));
  }
  return strategy_set_from_json(g, doc);
}

json solve_report(const SolveResult& result, double elapsed_ms) {
  json witness = json::array();
  if (result.witness) {
    for (const auto& m : *result.witness) witness.push_back({m.from, m.to});
  }
  return {{"solvable", result.solvable},
          {"witness", witness},
          {"explored", result.explored},
          {"elapsed_ms", elapsed_ms}};
}

json bound_entry(const BoundReport& report) {
  return {{"root", report.root},
          {"kappa", report.kappa},
          {"chi", report.chi},
          {"ratio_bound", report.ratio_bound},
          {"lp_value", to_string(report.lp_value)},
          {"lp_bound", report.lp_bound}};
}

json bound_report(const std::string& descriptor, const GraphBounds& bounds) {
  json per_root = json::array();
  for (const auto& rb : bounds.per_root) {
    if (rb.report) {
      per_root.push_back(bound_entry(*rb.report));
    } else {
      per_root.push_back({{"root", rb.root}, {"error", rb.error}});
    }
  }
  json overall = bounds.overall ? json(*bounds.overall) : json(nullptr);
  return {{"graph", descriptor}, {"per_root", per_root}, {"overall_bound", overall}};
}

json bound_report(const std::string& descriptor, const BoundReport& report,
                  BoundMethod method) {
  return {{"graph", descriptor},
          {"per_root", json::array({bound_entry(report)})},
          {"overall_bound",
           method == BoundMethod::kRatio ? report.ratio_bound : report.lp_bound}};
}

json partition_to_json(const PathPartition& partition) { return partition.paths; }

}  // namespace pebbling::io
