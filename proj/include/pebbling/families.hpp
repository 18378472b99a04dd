#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling::families {

/// Parent-array entry marking the root in tree_from_parents.
inline constexpr int kNoParent = -1;

/// Vertices 0..n-1 with edges (i, i+1); 0 and n-1 are the endpoints.
Graph path(int n);

/// Vertices 0..n-1 with edges (i, i+1 mod n). Requires n >= 3.
Graph cycle(int n);

Graph complete(int n);

/// 2^d vertices labelled by their bit patterns; adjacent iff the labels
/// differ in one bit. Requires 1 <= d <= 20.
Graph hypercube(int d);

/// Outer 5-cycle 0..4 with edges (i, i+1 mod 5), inner pentagram 5..9 with
/// edges (5+i, 5+(i+2 mod 5)), and spokes (i, 5+i).
Graph petersen();

/// Weak Bruhat graph on the n! permutations of 1..n, numbered in
/// lexicographic order; two permutations are adjacent iff they differ by
/// swapping two adjacent positions. Requires 2 <= n <= 6.
Graph bruhat(int n);

/// The permutation labelling used by bruhat(n): entry i is the permutation
/// with vertex id i.
std::vector<std::vector<int>> bruhat_labels(int n);

/// Tree whose vertex v is joined to parents[v]; exactly one entry must be
/// kNoParent.
Graph tree_from_parents(std::span<const int> parents);

/// Star K_{1,leaves} centred at vertex 0.
Graph star(int leaves);

/// Declarative description of a family member, as used by the CLI.
struct FamilySpec {
  std::string kind;  ///< path, cycle, complete, hypercube, petersen, bruhat, tree
  int size = 0;      ///< n (or d for hypercube); unused for petersen and tree
  std::vector<int> parents;  ///< tree only
};

Graph make(const FamilySpec& spec);

/// Short human-readable descriptor such as "cycle(5)".
std::string describe(const FamilySpec& spec);

std::span<const std::string_view> kind_names();

}  // namespace pebbling::families
