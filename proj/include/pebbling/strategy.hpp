#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// A rooted subtree of G with a doubling weight function.
///
/// `parent` maps every non-root strategy vertex to the next vertex on its
/// way to the root; `weight` gives each non-root strategy vertex a positive
/// weight. The root itself carries weight 0 and is absent from both maps.
/// Strategy is a plain value: validate_strategy decides whether it obeys the
/// rules against a particular graph.
class Strategy {
 public:
  Strategy() = default;
  Strategy(Vertex root, std::map<Vertex, Vertex> parent,
           std::map<Vertex, std::int64_t> weight)
      : root_(root), parent_(std::move(parent)), weight_(std::move(weight)) {}

  Vertex root() const { return root_; }
  const std::map<Vertex, Vertex>& parent() const { return parent_; }
  const std::map<Vertex, std::int64_t>& weight() const { return weight_; }

  /// 0 for the root and for vertices outside the strategy.
  std::int64_t weight_of(Vertex v) const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  Vertex root_ = 0;
  std::map<Vertex, Vertex> parent_;
  std::map<Vertex, std::int64_t> weight_;
};

/// Non-empty list of strategies sharing one root. Repeats are allowed and
/// act as multiplicities.
class StrategySet {
 public:
  StrategySet(Vertex root, std::vector<Strategy> strategies);

  Vertex root() const { return root_; }
  const std::vector<Strategy>& strategies() const { return strategies_; }
  std::size_t size() const { return strategies_.size(); }

 private:
  Vertex root_;
  std::vector<Strategy> strategies_;
};

struct StrategyDiagnostic {
  bool valid = true;
  /// Short rule name: "vertex-range", "root-entry", "edge", "tree",
  /// "weight-domain", "weight-positive", "doubling".
  std::string rule;
  std::optional<Vertex> vertex;
  std::string message;

  explicit operator bool() const { return valid; }
};

/// Checks every Strategy invariant against g and reports the first failure.
StrategyDiagnostic validate_strategy(const Graph& g, const Strategy& s);

/// Path r = p0, p1, ..., pm; p_j gets weight 2^(m-j).
Strategy strategy_from_path(const Graph& g, std::span<const Vertex> vertices);

/// Weights 2^(h - depth(v)) where h is the deepest strategy vertex.
Strategy strategy_from_tree(const Graph& g, Vertex root,
                            const std::map<Vertex, Vertex>& parent);

/// sum over strategy vertices of weight(v) * C(v). Throws OverflowError.
std::int64_t config_weight(const Strategy& s, const Configuration& c);

/// Weight of one pebble on every non-root strategy vertex.
std::int64_t unit_weight(const Strategy& s);

struct AllPaths {
  int max_length = 1;
};

struct BfsTrees {
  int max_trees = 16;
  std::uint64_t seed = 1;
};

/// Builds a candidate pool (paths, breadth-first trees, and trees grown from
/// each root neighbour with the root removed), then alternates solving the
/// exact LP over the pool with a local search for trees whose constraint the
/// current optimum violates. The strategies carrying dual weight are kept,
/// repeated in proportion to their integer-scaled dual values, so the
/// result's chi/kappa equals the final LP optimum. When that scaling needs
/// more than `budget` copies, rounded multiplicities are used instead and
/// chi/kappa may sit slightly above the optimum.
struct GreedySearch {
  int budget = 4096;
  /// Column-generation rounds after the initial pool.
  int rounds = 200;
  std::uint64_t seed = 1;
};

using GenerationMethod = std::variant<AllPaths, BfsTrees, GreedySearch>;

/// Every returned strategy passes validate_strategy. Throws CoverageError
/// when the set leaves some non-root vertex with zero total weight.
StrategySet generate_strategies(const Graph& g, Vertex root,
                                const GenerationMethod& method);

/// All simple paths from root with 1..max_length edges, in depth-first
/// order with ascending neighbours. Does not check coverage.
std::vector<Strategy> path_strategies(const Graph& g, Vertex root, int max_length);

struct WflCheck {
  bool holds = true;
  std::optional<Configuration> counterexample;
  std::uint64_t configurations_checked = 0;
  /// Largest strategy weight over the unsolvable configurations seen.
  std::int64_t max_unsolvable_weight = 0;
};

/// Brute-force check that every r-unsolvable configuration with at most
/// max_total pebbles has weight at most unit_weight(s).
WflCheck wfl_oracle_check(const Graph& g, Vertex root, const Strategy& s,
                          int max_total, std::uint64_t cap = 10'000'000);

}  // namespace pebbling
