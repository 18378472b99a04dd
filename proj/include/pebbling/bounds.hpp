#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/lp.hpp"
#include "pebbling/strategy.hpp"

namespace pebbling {

/// Upper bounds on pi(G, r) from one strategy set.
struct BoundReport {
  Vertex root = 0;
  std::int64_t kappa = 0;
  std::int64_t chi = 0;
  /// floor(chi / kappa) + 1
  std::int64_t ratio_bound = 0;
  Rational lp_value;
  /// floor(lp_value) + 1
  std::int64_t lp_bound = 0;
  std::size_t strategy_count = 0;
};

/// min over v != r of the summed strategy weights at v. Throws CoverageError
/// naming every vertex whose sum is zero.
std::int64_t kappa(const Graph& g, Vertex root, const StrategySet& set);

/// Sum of unit weights over the set.
std::int64_t chi(const StrategySet& set);

/// floor(chi / kappa) + 1 in exact integer arithmetic.
std::int64_t ratio_bound_from(std::int64_t kappa, std::int64_t chi);

std::int64_t ratio_bound(const Graph& g, Vertex root, const StrategySet& set);

/// Solves the relaxation exactly and reports both bounds.
BoundReport lp_bound(const Graph& g, Vertex root, const StrategySet& set);

enum class BoundMethod { kRatio, kLp };

struct RootBound {
  Vertex root = 0;
  std::optional<BoundReport> report;
  /// Set when this root failed, e.g. on a coverage error.
  std::string error;
};

struct GraphBounds {
  std::vector<RootBound> per_root;
  /// Max over roots; absent if any root failed.
  std::optional<std::int64_t> overall;
};

/// Generates strategies for every root and bounds each one. Failures are
/// recorded per root. Roots are processed by up to `threads` workers; the
/// result does not depend on the worker count.
GraphBounds bound_graph(const Graph& g, BoundMethod method,
                        const GenerationMethod& generation, int threads = 1);

}  // namespace pebbling
