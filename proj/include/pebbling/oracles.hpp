#pragma once

// Independent reference implementations used to check the main code paths.
// None of them shares code with the solver or the simplex.

#include <optional>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/lp.hpp"

namespace pebbling::oracles {

/// Plain exhaustive recursion over every legal move, no pruning or memo.
/// Only for tiny configurations.
bool brute_force_solvable(const Graph& g, const Configuration& c, Vertex root);

/// All-pairs distances by Floyd-Warshall; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Length of the shortest cycle, or std::nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Max of the objective over every basic feasible point, found by solving
/// each n x n subsystem of tight constraints (including x_j = 0). The LP must
/// be bounded; std::nullopt when no basic feasible point exists.
std::optional<Rational> enumerate_basic_points(const LinearProgram& lp);

}  // namespace pebbling::oracles
