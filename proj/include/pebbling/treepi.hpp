#pragma once

#include <cstdint>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// Edge-disjoint paths tiling a rooted tree. Each path is listed leaf first
/// and ends at the vertex where it stops climbing toward the root.
struct PathPartition {
  std::vector<std::vector<Vertex>> paths;
  /// Edge count of each path.
  std::vector<int> lengths;
};

/// Maximum path partition: every internal vertex continues upward the child
/// branch of greatest height (smallest child id on ties); every other child
/// branch stops there. Paths are ordered by leaf id. Throws GraphError when
/// `tree` is not a tree.
PathPartition max_path_partition(const Graph& tree, Vertex root);

/// pi(T, r) = sum_P 2^(e_P) - |P| + 1 over the maximum path partition.
std::int64_t pi_tree(const Graph& tree, Vertex root);

struct TreePi {
  std::int64_t value = 0;
  Vertex root = 0;
};

/// Max over roots of pi_tree; ties go to the smallest root.
TreePi pi_tree_all(const Graph& tree);

/// The configuration placing 2^(e_P) - 1 pebbles on the leaf of every path.
Configuration partition_witness(const Graph& tree, const PathPartition& partition);

}  // namespace pebbling
