#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "pebbling/error.hpp"
#include "pebbling/lp.hpp"
#include "pebbling/strategy.hpp"

namespace pebbling {

namespace {

using ParentMap = std::map<Vertex, Vertex>;

/// Adjacency lists in a per-call order: ascending for variant 0, shuffled
/// by a seeded generator otherwise.
std::vector<std::vector<Vertex>> ordered_neighbors(const Graph& g, int variant,
                                                   std::uint64_t seed) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
  std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(variant));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    auto& out = adj[static_cast<std::size_t>(v)];
    out.assign(nbrs.begin(), nbrs.end());
    if (variant > 0) std::shuffle(out.begin(), out.end(), rng);
  }
  return adj;
}

/// Breadth-first tree grown from `sources` (each already attached to its
/// parent), never entering `blocked`, keeping vertices up to `max_depth`
/// edges below the sources.
ParentMap bfs_tree(const std::vector<std::vector<Vertex>>& adj,
                   const std::vector<std::pair<Vertex, Vertex>>& sources,
                   Vertex blocked, int max_depth) {
  ParentMap parent;
  std::vector<int> depth(adj.size(), -1);
  depth[static_cast<std::size_t>(blocked)] = 0;
  std::deque<Vertex> queue;
  for (const auto& [v, p] : sources) {
    parent.emplace(v, p);
    depth[static_cast<std::size_t>(v)] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const int du = depth[static_cast<std::size_t>(u)];
    if (du >= max_depth) continue;
    for (Vertex w : adj[static_cast<std::size_t>(u)]) {
      if (depth[static_cast<std::size_t>(w)] >= 0) continue;
      depth[static_cast<std::size_t>(w)] = du + 1;
      parent.emplace(w, u);
      queue.push_back(w);
    }
  }
  return parent;
}

std::vector<Vertex> uncovered_vertices(const Graph& g, Vertex root,
                                       const std::vector<Strategy>& strategies) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const auto& s : strategies) {
    for (const auto& [v, w] : s.weight()) {
      if (w > 0) covered[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != root && !covered[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

StrategySet finish(const Graph& g, Vertex root, std::vector<Strategy> strategies) {
  if (auto missing = uncovered_vertices(g, root, strategies); !missing.empty()) {
    throw CoverageError(std::move(missing));
  }
  return StrategySet(root, std::move(strategies));
}

/// Appends strategy_from_tree(parent) unless an identical tree is present.
void add_tree(const Graph& g, Vertex root, const ParentMap& parent,
              std::set<ParentMap>& seen, std::vector<Strategy>& out) {
  if (parent.empty() || !seen.insert(parent).second) return;
  out.push_back(strategy_from_tree(g, root, parent));
}

std::vector<Strategy> bfs_spanning_trees(const Graph& g, Vertex root, int max_trees,
                                         std::uint64_t seed, int max_depth,
                                         std::set<ParentMap>& seen) {
  std::vector<Strategy> out;
  for (int variant = 0; variant < max_trees; ++variant) {
    const auto adj = ordered_neighbors(g, variant, seed);
    std::vector<std::pair<Vertex, Vertex>> sources;
    for (Vertex a : adj[static_cast<std::size_t>(root)]) sources.emplace_back(a, root);
    add_tree(g, root, bfs_tree(adj, sources, root, max_depth - 1), seen, out);
  }
  return out;
}

/// Reduced profit of a tree: sum over its vertices of w(v) * (x_v - 1),
/// with w(v) = 2^(height - depth). Positive means the tree's constraint cuts
/// off the point x.
double tree_profit(const ParentMap& parent, Vertex root,
                   const std::vector<double>& value) {
  std::map<Vertex, int> depth;
  int height = 0;
  for (const auto& [v, p] : parent) {
    int d = 1;
    for (Vertex cur = p; cur != root; cur = parent.at(cur)) ++d;
    depth.emplace(v, d);
    height = std::max(height, d);
  }
  double total = 0;
  for (const auto& [v, d] : depth) {
    total += std::ldexp(1.0, height - d) * (value[static_cast<std::size_t>(v)] - 1.0);
  }
  return total;
}

/// Hill climbing over trees rooted at `root`: add a vertex as a leaf, drop a
/// leaf, or move a leaf to another parent; keep the best strict improvement.
ParentMap improve_tree(const Graph& g, Vertex root, ParentMap tree,
                       const std::vector<double>& value, std::mt19937_64& rng) {
  constexpr int kMaxDepth = 20;
  auto in_tree = [&](Vertex v) { return v == root || tree.contains(v); };
  auto depth_of = [&](Vertex v) {
    int d = 0;
    for (Vertex cur = v; cur != root; cur = tree.at(cur)) ++d;
    return d;
  };
  double current = tree_profit(tree, root, value);
  while (true) {
    std::vector<ParentMap> neighbours;
    std::vector<int> child_count(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [v, p] : tree) ++child_count[static_cast<std::size_t>(p)];
    for (Vertex u = 0; u < g.order(); ++u) {
      if (in_tree(u)) continue;
      for (Vertex p : g.neighbors(u)) {
        if (!in_tree(p) || depth_of(p) + 1 > kMaxDepth) continue;
        auto next = tree;
        next.emplace(u, p);
        neighbours.push_back(std::move(next));
      }
    }
    for (const auto& [v, p] : tree) {
      if (child_count[static_cast<std::size_t>(v)] != 0) continue;
      if (tree.size() > 1) {
        auto next = tree;
        next.erase(v);
        neighbours.push_back(std::move(next));
      }
      for (Vertex q : g.neighbors(v)) {
        if (q == p || !in_tree(q) || depth_of(q) + 1 > kMaxDepth) continue;
        auto next = tree;
        next[v] = q;
        neighbours.push_back(std::move(next));
      }
    }
    std::shuffle(neighbours.begin(), neighbours.end(), rng);
    const ParentMap* best = nullptr;
    double best_profit = current + 1e-9;
    for (const auto& cand : neighbours) {
      const double profit = tree_profit(cand, root, value);
      if (profit > best_profit) {
        best_profit = profit;
        best = &cand;
      }
    }
    if (!best) return tree;
    tree = *best;
    current = best_profit;
  }
}

/// Exact test of sum_v w(v) x_v > unit_weight(s).
bool violates(const Strategy& s, const std::vector<Vertex>& vars,
              const std::vector<Rational>& point) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto w = s.weight_of(vars[j]);
    if (w != 0) lhs += Rational(static_cast<long>(w)) * point[j];
  }
  return lhs > Rational(static_cast<long>(unit_weight(s)));
}

/// Fallback when the exact dual scaling needs more copies than the budget:
/// multiplicities round(k * y_i / max y) for growing k, keeping the covering
/// choice with the smallest floor(chi / kappa). Stops early at floor(z).
std::vector<std::size_t> rounded_multiplicities(const Graph& g, Vertex root,
                                                const std::vector<Strategy>& pool,
                                                const LpSolution& sol, std::size_t budget) {
  const auto vars = relaxation_vertices(g, root);
  std::vector<double> y(pool.size());
  double y_max = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    y[i] = sol.dual[i].get_d();
    y_max = std::max(y_max, y[i]);
  }
  const std::int64_t target = floor_to_int(sol.value);
  std::vector<std::size_t> best;
  std::int64_t best_floor = std::numeric_limits<std::int64_t>::max();
  std::size_t best_total = 0;
  for (std::size_t k = 1; k <= budget; ++k) {
    std::vector<std::size_t> m(pool.size(), 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      m[i] = static_cast<std::size_t>(std::llround(static_cast<double>(k) * y[i] / y_max));
      total += m[i];
    }
    if (total > budget) break;
    std::int64_t chi = 0;
    std::int64_t kappa = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      chi += static_cast<std::int64_t>(m[i]) * unit_weight(pool[i]);
    }
    for (Vertex v : vars) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (m[i] != 0) sum += static_cast<std::int64_t>(m[i]) * pool[i].weight_of(v);
      }
      kappa = std::min(kappa, sum);
    }
    if (kappa <= 0) continue;
    const std::int64_t floor_ratio = chi / kappa;
    if (floor_ratio < best_floor || (floor_ratio == best_floor && total < best_total)) {
      best = m;
      best_floor = floor_ratio;
      best_total = total;
    }
    if (best_floor <= target) break;
  }
  if (best.empty()) throw OverflowError("no covering multiplicities fit the search budget");
  return best;
}

StrategySet greedy_search(const Graph& g, Vertex root, const GreedySearch& opts) {
  const int ecc = eccentricity(g, root);
  const auto budget = static_cast<std::size_t>(std::max(1, opts.budget));
  constexpr int kVariants = 4;

  std::set<ParentMap> seen;
  std::vector<Strategy> pool;
  auto take = [&](std::vector<Strategy> more) {
    for (auto& s : more) {
      if (pool.size() >= budget) return;
      pool.push_back(std::move(s));
    }
  };

  // Paths first; their parent maps join `seen` so trees do not duplicate
  // them.
  for (auto& s : path_strategies(g, root, ecc + 1)) {
    if (pool.size() >= budget) break;
    if (seen.insert(s.parent()).second) pool.push_back(std::move(s));
  }
  // Breadth-first trees from the root, truncated at every depth.
  for (int depth = 1; depth <= ecc; ++depth) {
    take(bfs_spanning_trees(g, root, kVariants, opts.seed, depth, seen));
  }
  // Trees hanging off one root neighbour a, grown in G - root so vertices
  // near the root may sit deep in the tree.
  for (Vertex a : g.neighbors(root)) {
    for (int height = 1; height <= ecc + 2; ++height) {
      for (int variant = 0; variant < kVariants; ++variant) {
        const auto adj = ordered_neighbors(g, variant, opts.seed);
        std::vector<Strategy> trees;
        add_tree(g, root, bfs_tree(adj, {{a, root}}, root, height - 1), seen, trees);
        take(std::move(trees));
      }
    }
  }

  if (auto missing = uncovered_vertices(g, root, pool); !missing.empty()) {
    throw CoverageError(std::move(missing));
  }

  // Column generation: add trees whose constraint the current optimum
  // violates until local search finds none or the budget is spent.
  LpSolution sol;
  std::mt19937_64 rng(opts.seed);
  for (int round = 0;; ++round) {
    sol = solve_max(build_relaxation(g, root, StrategySet(root, pool)));
    if (sol.status != LpStatus::kOptimal) {
      throw std::logic_error("relaxation over a covering pool is unbounded");
    }
    if (round >= opts.rounds || pool.size() >= budget) break;
    const auto vars = relaxation_vertices(g, root);
    std::vector<double> value(static_cast<std::size_t>(g.order()), 0.0);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      value[static_cast<std::size_t>(vars[j])] = sol.point[j].get_d();
    }
    std::vector<ParentMap> starts;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (sgn(sol.dual[i]) > 0) starts.push_back(pool[i].parent());
    }
    for (Vertex a : g.neighbors(root)) starts.push_back({{a, root}});
    std::size_t added = 0;
    for (const auto& start : starts) {
      auto tree = improve_tree(g, root, start, value, rng);
      if (pool.size() >= budget) break;
      if (seen.contains(tree)) continue;
      Strategy s = strategy_from_tree(g, root, tree);
      if (!violates(s, vars, sol.point)) continue;
      seen.insert(tree);
      pool.push_back(std::move(s));
      ++added;
    }
    if (added == 0) break;
  }

  // Integer multiplicities proportional to the dual solution.
  mpz_class lcm = 1;
  for (const auto& y : sol.dual) {
    if (sgn(y) > 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), y.get_den_mpz_t());
  }
  std::vector<mpz_class> mult(sol.dual.size());
  mpz_class common = 0;
  for (std::size_t i = 0; i < sol.dual.size(); ++i) {
    if (sgn(sol.dual[i]) <= 0) continue;
    mult[i] = sol.dual[i].get_num() * (lcm / sol.dual[i].get_den());
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), mult[i].get_mpz_t());
  }
  std::vector<std::size_t> copies(mult.size(), 0);
  bool exact = true;
  std::size_t total = 0;
  for (std::size_t i = 0; i < mult.size() && exact; ++i) {
    if (sgn(mult[i]) <= 0) continue;
    const mpz_class c = mult[i] / common;
    exact = c.fits_uint_p() && c.get_ui() <= budget;
    if (!exact) break;
    copies[i] = c.get_ui();
    total += copies[i];
    exact = total <= budget;
  }
  if (!exact) copies = rounded_multiplicities(g, root, pool, sol, budget);
  std::vector<Strategy> chosen;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t c = 0; c < copies[i]; ++c) chosen.push_back(pool[i]);
  }
  return finish(g, root, std::move(chosen));
}

}  // namespace

StrategySet generate_strategies(const Graph& g, Vertex root,
                                const GenerationMethod& method) {
  require_vertex(g, root, "root");
  require_connected(g);
  if (g.order() < 2) throw ArgumentError("strategies need at least two vertices");
  return std::visit(
      [&](const auto& m) -> StrategySet {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, AllPaths>) {
          if (m.max_length < 1) throw ArgumentError("max_length must be >= 1");
          return finish(g, root, path_strategies(g, root, m.max_length));
        } else if constexpr (std::is_same_v<M, BfsTrees>) {
          if (m.max_trees < 1) throw ArgumentError("max_trees must be >= 1");
          std::set<ParentMap> seen;
          return finish(g, root,
                        bfs_spanning_trees(g, root, m.max_trees, m.seed,
                                           g.order(), seen));
        } else {
          return greedy_search(g, root, m);
        }
      },
      method);
}

}  // namespace pebbling
