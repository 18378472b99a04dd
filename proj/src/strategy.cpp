#include "pebbling/strategy.hpp"

#include <algorithm>
#include <set>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

namespace {

constexpr int kMaxDepth = 62;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("weight sum exceeds 64-bit range");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("weight product exceeds 64-bit range");
  }
  return out;
}

StrategyDiagnostic fail(std::string rule, std::optional<Vertex> v,
                        std::string message) {
  return {false, std::move(rule), v, std::move(message)};
}

}  // namespace

std::int64_t Strategy::weight_of(Vertex v) const {
  const auto it = weight_.find(v);
  return it == weight_.end() ? 0 : it->second;
}

StrategySet::StrategySet(Vertex root, std::vector<Strategy> strategies)
    : root_(root), strategies_(std::move(strategies)) {
  if (strategies_.empty()) throw StrategyError("strategy set is empty");
  for (const auto& s : strategies_) {
    if (s.root() != root_) {
      throw StrategyError("strategy rooted at " + std::to_string(s.root()) +
                          " in a set rooted at " + std::to_string(root_));
    }
  }
}

StrategyDiagnostic validate_strategy(const Graph& g, const Strategy& s) {
  const Vertex r = s.root();
  if (!g.contains(r)) return fail("vertex-range", r, "root is not a vertex of G");
  if (s.parent().empty()) return fail("tree", r, "strategy has no non-root vertex");
  for (const auto& [v, p] : s.parent()) {
    if (!g.contains(v) || !g.contains(p)) {
      return fail("vertex-range", v, "parent entry names a non-vertex");
    }
    if (v == r) return fail("root-entry", v, "root must not have a parent");
    if (!g.has_edge(v, p)) {
      return fail("edge", v,
                  "(" + std::to_string(v) + ", " + std::to_string(p) +
                      ") is not an edge of G");
    }
  }
  for (const auto& [v, p] : s.parent()) {
    Vertex cur = v;
    std::size_t steps = 0;
    while (cur != r) {
      const auto it = s.parent().find(cur);
      if (it == s.parent().end()) {
        return fail("tree", v,
                    "parent chain from " + std::to_string(v) + " stops at " +
                        std::to_string(cur) + " before the root");
      }
      if (++steps > s.parent().size()) {
        return fail("tree", v, "parent chain from " + std::to_string(v) + " cycles");
      }
      cur = it->second;
    }
  }
  if (const auto it = s.weight().find(r); it != s.weight().end() && it->second != 0) {
    return fail("root-entry", r, "root weight must be 0");
  }
  for (const auto& [v, w] : s.weight()) {
    if (v != r && !s.parent().contains(v)) {
      return fail("weight-domain", v, "weight given for a vertex outside the tree");
    }
  }
  for (const auto& [v, p] : s.parent()) {
    const auto it = s.weight().find(v);
    if (it == s.weight().end()) {
      return fail("weight-domain", v, "tree vertex has no weight");
    }
    if (it->second <= 0) return fail("weight-positive", v, "weight must be positive");
  }
  for (const auto& [v, p] : s.parent()) {
    if (p == r) continue;
    const std::int64_t w = s.weight().at(v);
    const std::int64_t wp = s.weight().at(p);
    if (w > wp / 2 || wp != 2 * w) {
      return fail("doubling", v,
                  "weight(" + std::to_string(p) + ") = " + std::to_string(wp) +
                      " but 2 * weight(" + std::to_string(v) + ") = " +
                      std::to_string(2 * w));
    }
  }
  return {};
}

Strategy strategy_from_path(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.size() < 2) throw StrategyError("path strategy needs at least one edge");
  const int m = static_cast<int>(vertices.size()) - 1;
  if (m > kMaxDepth) {
    throw OverflowError("path strategy of length " + std::to_string(m) +
                        " exceeds the depth limit " + std::to_string(kMaxDepth));
  }
  std::set<Vertex> seen;
  for (Vertex v : vertices) {
    require_vertex(g, v);
    if (!seen.insert(v).second) {
      throw StrategyError("vertex " + std::to_string(v) + " repeats on the path");
    }
  }
  std::map<Vertex, Vertex> parent;
  std::map<Vertex, std::int64_t> weight;
  for (int j = 1; j <= m; ++j) {
    const Vertex v = vertices[static_cast<std::size_t>(j)];
    const Vertex p = vertices[static_cast<std::size_t>(j - 1)];
    if (!g.has_edge(v, p)) {
      throw StrategyError("consecutive path vertices " + std::to_string(p) +
                          " and " + std::to_string(v) + " are not adjacent");
    }
    parent.emplace(v, p);
    weight.emplace(v, std::int64_t{1} << (m - j));
  }
  return Strategy(vertices.front(), std::move(parent), std::move(weight));
}

Strategy strategy_from_tree(const Graph& g, Vertex root,
                            const std::map<Vertex, Vertex>& parent) {
  require_vertex(g, root, "root");
  std::map<Vertex, int> depth;
  for (const auto& [v, p] : parent) {
    require_vertex(g, v);
    require_vertex(g, p);
    if (v == root) throw StrategyError("root must not have a parent");
    if (!g.has_edge(v, p)) {
      throw StrategyError("(" + std::to_string(v) + ", " + std::to_string(p) +
                          ") is not an edge of G");
    }
  }
  int height = 0;
  for (const auto& [v, p] : parent) {
    int d = 0;
    Vertex cur = v;
    while (cur != root) {
      const auto it = parent.find(cur);
      if (it == parent.end()) {
        throw StrategyError("vertex " + std::to_string(v) + " does not reach the root");
      }
      if (++d > static_cast<int>(parent.size())) {
        throw StrategyError("parent map has a cycle through " + std::to_string(v));
      }
      cur = it->second;
    }
    if (d > kMaxDepth) throw OverflowError("strategy deeper than the depth limit");
    depth.emplace(v, d);
    height = std::max(height, d);
  }
  std::map<Vertex, std::int64_t> weight;
  for (const auto& [v, d] : depth) weight.emplace(v, std::int64_t{1} << (height - d));
  Strategy s(root, parent, std::move(weight));
  if (auto diag = validate_strategy(g, s); !diag) throw StrategyError(diag.message);
  return s;
}

std::int64_t config_weight(const Strategy& s, const Configuration& c) {
  std::int64_t total = 0;
  for (const auto& [v, w] : s.weight()) {
    if (v == s.root()) continue;
    if (v < 0 || v >= c.size()) {
      throw ArgumentError("configuration does not cover strategy vertex " +
                          std::to_string(v));
    }
    total = checked_add(total, checked_mul(w, c[v]));
  }
  return total;
}

std::int64_t unit_weight(const Strategy& s) {
  std::int64_t total = 0;
  for (const auto& [v, w] : s.weight()) {
    if (v != s.root()) total = checked_add(total, w);
  }
  return total;
}

std::vector<Strategy> path_strategies(const Graph& g, Vertex root, int max_length) {
  require_vertex(g, root, "root");
  std::vector<Strategy> out;
  std::vector<Vertex> stack{root};
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  on_path[static_cast<std::size_t>(root)] = 1;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(stack.size()) - 1 >= max_length) return;
    for (Vertex u : g.neighbors(stack.back())) {
      if (on_path[static_cast<std::size_t>(u)]) continue;
      stack.push_back(u);
      on_path[static_cast<std::size_t>(u)] = 1;
      out.push_back(strategy_from_path(g, stack));
      self(self);
      on_path[static_cast<std::size_t>(u)] = 0;
      stack.pop_back();
    }
  };
  extend(extend);
  return out;
}

WflCheck wfl_oracle_check(const Graph& g, Vertex root, const Strategy& s,
                          int max_total, std::uint64_t cap) {
  require_vertex(g, root, "root");
  require_connected(g);
  if (s.root() != root) throw ArgumentError("strategy root differs from the check root");
  if (auto diag = validate_strategy(g, s); !diag) throw StrategyError(diag.message);
  if (max_total < 0) throw ArgumentError("max_total must be non-negative");

  std::vector<Vertex> others;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != root) others.push_back(v);
  }
  const int k = static_cast<int>(others.size());
  std::uint64_t needed = 0;
  for (int t = 0; t <= max_total; ++t) {
    const auto c = composition_count(t, k);
    needed = c > cap ? cap + 1 : std::min(cap + 1, needed + c);
  }
  if (needed > cap) throw CapExceededError(cap, needed, max_total, -1);

  WflCheck result;
  const std::int64_t bound = unit_weight(s);
  // Every configuration with C(root) = 0 and at most max_total pebbles, by
  // odometer over the non-root vertices.
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  int total = 0;
  while (true) {
    Configuration c(g.order());
    for (int i = 0; i < k; ++i) c[others[static_cast<std::size_t>(i)]] = parts[static_cast<std::size_t>(i)];
    ++result.configurations_checked;
    if (!is_solvable(g, c, root).solvable) {
      const std::int64_t w = config_weight(s, c);
      result.max_unsolvable_weight = std::max(result.max_unsolvable_weight, w);
      if (w > bound) {
        result.holds = false;
        result.counterexample = c;
        return result;
      }
    }
    int i = 0;
    while (i < k) {
      if (total < max_total) {
        ++parts[static_cast<std::size_t>(i)];
        ++total;
        break;
      }
      total -= parts[static_cast<std::size_t>(i)];
      parts[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return result;
}

}  // namespace pebbling
