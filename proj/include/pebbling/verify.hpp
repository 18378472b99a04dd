#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/strategy.hpp"

namespace pebbling::verify {

enum class Level {
  /// Every check except those marked slow.
  kFast,
  kFull,
};

using PiRootedFn =
    std::function<PiResult(const Graph&, Vertex, const SolverOptions&)>;

struct VerifyOptions {
  Level level = Level::kFast;
  SolverOptions solver;
  /// Exact pebbling-number routine under test; defaults to pi_rooted.
  PiRootedFn pi_rooted;
  /// Check ids to run; empty runs every check of the level.
  std::vector<std::string> only;
  /// Receives one line per finished check when non-null.
  std::ostream* progress = nullptr;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool slow = false;
  bool passed = false;
  std::string detail;
  double elapsed_seconds = 0;
  double budget_seconds = 0;
};

/// Reproduction checks for the published values and the soundness
/// properties of the bounds. A check fails when its assertion fails, when it
/// throws, or when it overruns its time budget.
std::vector<CheckResult> run(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

/// One "PASS/FAIL id name (elapsed / budget) detail" line per check.
std::string format_line(const CheckResult& result);
std::string format_table(const std::vector<CheckResult>& results);

/// The three hand-built Petersen strategies (root 0) whose weights sum to at
/// least 4 on every other vertex, with total unit weight 36.
StrategySet reference_petersen_strategies();

/// Every parent array with parent[0] = -1 and parent[i] < i on n vertices.
std::vector<std::vector<int>> recursive_parent_arrays(int n);

}  // namespace pebbling::verify
