#include "pebbling/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

void require_root(const StrategySet& set, Vertex root) {
  if (set.root() != root) {
    throw ArgumentError("strategy set is rooted at " + std::to_string(set.root()) +
                        ", not " + std::to_string(root));
  }
}

}  // namespace

std::int64_t kappa(const Graph& g, Vertex root, const StrategySet& set) {
  require_vertex(g, root, "root");
  require_root(set, root);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(g.order()), 0);
  for (const auto& s : set.strategies()) {
    for (const auto& [v, w] : s.weight()) {
      if (!g.contains(v)) throw ArgumentError("strategy vertex outside the graph");
      auto& slot = sums[static_cast<std::size_t>(v)];
      if (__builtin_add_overflow(slot, w, &slot)) {
        throw OverflowError("kappa sum exceeds 64-bit range");
      }
    }
  }
  std::vector<int> uncovered;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == root) continue;
    const auto sum = sums[static_cast<std::size_t>(v)];
    if (sum <= 0) uncovered.push_back(v);
    best = std::min(best, sum);
  }
  if (!uncovered.empty()) throw CoverageError(std::move(uncovered));
  if (best == std::numeric_limits<std::int64_t>::max()) {
    throw ArgumentError("graph has no non-root vertex");
  }
  return best;
}

std::int64_t chi(const StrategySet& set) {
  std::int64_t total = 0;
  for (const auto& s : set.strategies()) {
    if (__builtin_add_overflow(total, unit_weight(s), &total)) {
      throw OverflowError("chi exceeds 64-bit range");
    }
  }
  return total;
}

std::int64_t ratio_bound_from(std::int64_t kappa_value, std::int64_t chi_value) {
  if (kappa_value <= 0) throw ArgumentError("kappa must be positive");
  if (chi_value < 0) throw ArgumentError("chi must be non-negative");
  return chi_value / kappa_value + 1;
}

std::int64_t ratio_bound(const Graph& g, Vertex root, const StrategySet& set) {
  return ratio_bound_from(kappa(g, root, set), chi(set));
}

BoundReport lp_bound(const Graph& g, Vertex root, const StrategySet& set) {
  BoundReport report;
  report.root = root;
  report.kappa = kappa(g, root, set);
  report.chi = chi(set);
  report.ratio_bound = ratio_bound_from(report.kappa, report.chi);
  report.strategy_count = set.size();
  const auto sol = solve_max(build_relaxation(g, root, set));
  if (sol.status == LpStatus::kUnbounded) {
    // Full coverage makes the relaxation bounded; reaching this is a bug.
    throw std::logic_error("relaxation unbounded despite full coverage");
  }
  report.lp_value = sol.value;
  report.lp_bound = floor_to_int(sol.value) + 1;
  return report;
}

GraphBounds bound_graph(const Graph& g, BoundMethod method,
                        const GenerationMethod& generation, int threads) {
  require_connected(g);
  GraphBounds out;
  out.per_root.resize(static_cast<std::size_t>(g.order()));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < g.order(); r = next++) {
      auto& slot = out.per_root[static_cast<std::size_t>(r)];
      slot.root = r;
      try {
        const auto set = generate_strategies(g, r, generation);
        slot.report = lp_bound(g, r, set);
      } catch (const Error& e) {
        slot.error = e.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::int64_t overall = 0;
  for (const auto& rb : out.per_root) {
    if (!rb.report) return out;
    overall = std::max(overall, method == BoundMethod::kRatio ? rb.report->ratio_bound
                                                              : rb.report->lp_bound);
  }
  out.overall = overall;
  return out;
}

}  // namespace pebbling
