#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// One pebbling move: two pebbles leave `from`, one arrives at `to`.
struct Move {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

struct SolveResult {
  bool solvable = false;
  /// Present iff solvable; replays to a configuration with a pebble on the
  /// root.
  std::optional<MoveSequence> witness;
  /// Search nodes visited.
  std::uint64_t explored = 0;
};

/// Replays `moves` from `start`. Throws ArgumentError on a move along a
/// non-edge or from a vertex holding fewer than two pebbles.
Configuration apply_moves(const Graph& g, Configuration start,
                          std::span<const Move> moves);

/// Exact r-solvability by memoised depth-first search over configurations.
///
/// Accepts immediately when the root holds a pebble, or when some vertex v
/// holds at least 2^dist(v, root) pebbles (walk them along a shortest
/// path). Rejects immediately when sum_v C(v) / 2^dist(v, root) < 1, which
/// no move can increase. Otherwise branches over every legal move.
SolveResult is_solvable(const Graph& g, const Configuration& c, Vertex root);

enum class Enumeration {
  /// Level scan unless the first level is too large to enumerate, then
  /// frontier.
  kAuto,
  /// Every configuration of total t (root empty), from t = max(n, 2^ecc).
  kLevelScan,
  /// Grow the downward-closed set of unsolvable configurations one pebble
  /// at a time; the first empty level is the pebbling number.
  kFrontier,
};

struct SolverOptions {
  /// Configurations examined per level before giving up.
  std::uint64_t max_configs = 10'000'000;
  int threads = 1;
  Enumeration enumeration = Enumeration::kAuto;
};

struct PiResult {
  int value = 0;
  /// An r-unsolvable configuration with value - 1 pebbles.
  Configuration critical_config;
  /// For pi_rooted the requested root; for pi_graph the maximising root.
  Vertex root = 0;
  /// Configurations handed to is_solvable across all levels.
  std::uint64_t configurations_checked = 0;
};

/// pi(G, r): the least t such that every configuration of t pebbles is
/// r-solvable.
PiResult pi_rooted(const Graph& g, Vertex root, const SolverOptions& options = {});

/// pi(G) = max over roots of pi(G, r). Ties go to the smallest root.
PiResult pi_graph(const Graph& g, const SolverOptions& options = {});

struct MaxUnsolvable {
  int size = 0;
  Configuration witness;
};

/// Largest r-unsolvable configuration size, pi(G, r) - 1, with a witness.
MaxUnsolvable max_unsolvable(const Graph& g, Vertex root,
                             const SolverOptions& options = {});

/// Number of weak compositions of `total` into `parts` parts, saturating at
/// UINT64_MAX.
std::uint64_t composition_count(int total, int parts);

}  // namespace pebbling
