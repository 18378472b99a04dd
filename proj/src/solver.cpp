#include "pebbling/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <unordered_set>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

constexpr int kMaxCount = std::numeric_limits<char16_t>::max();
// Auto mode falls back to the frontier search above this first-level size.
constexpr std::uint64_t kLevelScanPreferredLimit = 1'000'000;

/// Search state for one (graph, root) pair. Reusable across configurations;
/// the memo is reset at the start of every solve().
class RootedSearch {
 public:
  RootedSearch(const Graph& g, Vertex root) : g_(g), root_(root) {
    const int n = g.order();
    dist_.resize(static_cast<std::size_t>(n));
    next_.assign(static_cast<std::size_t>(n), -1);
    const auto dist = distances_from(g, root);
    for (Vertex v = 0; v < n; ++v) {
      if (!dist[static_cast<std::size_t>(v)]) throw DisconnectedGraphError();
      dist_[static_cast<std::size_t>(v)] = *dist[static_cast<std::size_t>(v)];
    }
    ecc_ = n ? *std::max_element(dist_.begin(), dist_.end()) : 0;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(v)) {
        if (dist_[static_cast<std::size_t>(u)] + 1 ==
            dist_[static_cast<std::size_t>(v)]) {
          next_[static_cast<std::size_t>(v)] = u;
          break;
        }
      }
    }
  }

  int eccentricity() const { return ecc_; }
  int dist(Vertex v) const { return dist_[static_cast<std::size_t>(v)]; }
  std::uint64_t explored() const { return explored_; }

  /// `counts` is restored before returning. Moves of a solution are appended
  /// to `trail` when it is non-null.
  bool solve(std::vector<int>& counts, MoveSequence* trail) {
    memo_.clear();
    explored_ = 0;
    for (int c : counts) {
      if (c > kMaxCount) {
        throw ArgumentError("pebble counts above " + std::to_string(kMaxCount) +
                            " are not supported by the exhaustive solver");
      }
    }
    return dfs(counts, trail);
  }

 private:
  bool reaches_by_potential(const std::vector<int>& counts) const {
    // sum_v C(v) 2^(ecc - d(v)) >= 2^ecc is necessary for solvability.
    if (ecc_ > 62) return true;
    unsigned __int128 potential = 0;
    for (std::size_t v = 0; v < counts.size(); ++v) {
      potential += static_cast<unsigned __int128>(counts[v])
                   << (ecc_ - dist_[v]);
    }
    return potential >= (static_cast<unsigned __int128>(1) << ecc_);
  }

  void walk_to_root(Vertex v, MoveSequence* trail) const {
    if (!trail) return;
    for (int d = dist(v); d > 0; --d) {
      const Vertex next = next_[static_cast<std::size_t>(v)];
      for (std::int64_t i = 0; i < (std::int64_t{1} << (d - 1)); ++i) {
        trail->push_back({v, next});
      }
      v = next;
    }
  }

  bool dfs(std::vector<int>& counts, MoveSequence* trail) {
    ++explored_;
    if (counts[static_cast<std::size_t>(root_)] >= 1) return true;
    for (Vertex v = 0; v < g_.order(); ++v) {
      const int d = dist(v);
      if (d < 31 && counts[static_cast<std::size_t>(v)] >= (1 << d)) {
        walk_to_root(v, trail);
        return true;
      }
    }
    if (!reaches_by_potential(counts)) return false;

    std::u16string key(counts.begin(), counts.end());
    if (memo_.contains(key)) return false;

    for (Vertex v = 0; v < g_.order(); ++v) {
      if (counts[static_cast<std::size_t>(v)] < 2) continue;
      for (Vertex u : g_.neighbors(v)) {
        counts[static_cast<std::size_t>(v)] -= 2;
        counts[static_cast<std::size_t>(u)] += 1;
        const std::size_t mark = trail ? trail->size() : 0;
        if (trail) trail->push_back({v, u});
        const bool ok = dfs(counts, trail);
        counts[static_cast<std::size_t>(v)] += 2;
        counts[static_cast<std::size_t>(u)] -= 1;
        if (ok) return true;
        if (trail) trail->resize(mark);
      }
    }
    memo_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  Vertex root_;
  std::vector<int> dist_;
  std::vector<Vertex> next_;
  int ecc_ = 0;
  std::unordered_set<std::u16string> memo_;
  std::uint64_t explored_ = 0;
};

/// Runs fn(worker) on `threads` workers and joins them.
template <typename Fn>
void run_workers(int threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) pool.emplace_back([&fn, w] { fn(w); });
}

/// Steps `parts` to the next weak composition of the same total; returns
/// false after the last one. Order starts at (t, 0, ..., 0).
bool next_composition(std::vector<int>& parts) {
  const int k = static_cast<int>(parts.size());
  int j = k - 2;
  while (j >= 0 && parts[static_cast<std::size_t>(j)] == 0) --j;
  if (j < 0) return false;
  const int tail = parts[static_cast<std::size_t>(k - 1)];
  parts[static_cast<std::size_t>(k - 1)] = 0;
  parts[static_cast<std::size_t>(j)] -= 1;
  parts[static_cast<std::size_t>(j + 1)] = tail + 1;
  return true;
}

struct LevelOutcome {
  bool found_unsolvable = false;
  std::vector<int> unsolvable;
};

class PiSearch {
 public:
  PiSearch(const Graph& g, Vertex root, const SolverOptions& options)
      : g_(g), root_(root), options_(options), probe_(g, root) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != root) others_.push_back(v);
    }
  }

  PiResult run() {
    const int n = g_.order();
    const int ecc = probe_.eccentricity();
    if (ecc >= 31) throw ArgumentError("eccentricity too large for exact search");
    const int start = std::max(n, 1 << ecc);
    Enumeration mode = options_.enumeration;
    if (mode == Enumeration::kAuto) {
      const auto first = composition_count(start, static_cast<int>(others_.size()));
      mode = first <= std::min(options_.max_configs, kLevelScanPreferredLimit)
                 ? Enumeration::kLevelScan
                 : Enumeration::kFrontier;
    }
    PiResult result =
        mode == Enumeration::kFrontier ? frontier() : level_scan(start, ecc);
    result.root = root_;
    result.configurations_checked = checked_;
    return result;
  }

 private:
  int threads() const { return std::max(1, options_.threads); }

  std::vector<int> expand(const std::vector<int>& parts) const {
    std::vector<int> counts(static_cast<std::size_t>(g_.order()), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      counts[static_cast<std::size_t>(others_[i])] = parts[i];
    }
    return counts;
  }

  /// Finds the first unsolvable configuration of total t, in composition
  /// order, independent of the worker count.
  LevelOutcome scan_level(int total) {
    const int k = static_cast<int>(others_.size());
    if (k == 0) return {};
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::uint64_t> checked{0};
    const int workers = threads();
    run_workers(workers, [&](int w) {
      RootedSearch search(g_, root_);
      std::vector<int> parts(static_cast<std::size_t>(k), 0);
      parts[0] = total;
      std::uint64_t index = 0;
      std::uint64_t local_checked = 0;
      do {
        if (index >= best.load(std::memory_order_relaxed)) break;
        if (index % static_cast<std::uint64_t>(workers) ==
            static_cast<std::uint64_t>(w)) {
          auto counts = expand(parts);
          ++local_checked;
          if (!search.solve(counts, nullptr)) {
            std::uint64_t cur = best.load();
            while (index < cur && !best.compare_exchange_weak(cur, index)) {
            }
            break;
          }
        }
        ++index;
      } while (next_composition(parts));
      checked += local_checked;
    });
    checked_ += checked.load();
    const std::uint64_t hit = best.load();
    if (hit == kNone) return {};
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    parts[0] = total;
    for (std::uint64_t i = 0; i < hit; ++i) next_composition(parts);
    return {true, expand(parts)};
  }

  std::vector<int> lower_bound_witness(int start, int ecc) const {
    std::vector<int> counts(static_cast<std::size_t>(g_.order()), 0);
    if (start == g_.order()) {
      for (Vertex v : others_) counts[static_cast<std::size_t>(v)] = 1;
      return counts;
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (probe_.dist(v) == ecc) {
        counts[static_cast<std::size_t>(v)] = (1 << ecc) - 1;
        return counts;
      }
    }
    return counts;
  }

  PiResult level_scan(int start, int ecc) {
    std::vector<int> critical;
    int last_unsolvable = -1;
    for (int total = start;; ++total) {
      const auto count = composition_count(total, static_cast<int>(others_.size()));
      if (count > options_.max_configs) {
        throw CapExceededError(options_.max_configs, count, total,
                               last_unsolvable >= 0 ? last_unsolvable : start - 1);
      }
      auto outcome = scan_level(total);
      if (outcome.found_unsolvable) {
        critical = std::move(outcome.unsolvable);
        last_unsolvable = total;
        continue;
      }
      if (critical.empty() || last_unsolvable != total - 1) {
        critical = lower_bound_witness(start, ecc);
        ++checked_;
        if (probe_.solve(critical, nullptr)) {
          throw std::logic_error("lower-bound witness unexpectedly solvable");
        }
      }
      return PiResult{total, Configuration(std::move(critical)), root_, 0};
    }
  }

  PiResult frontier() {
    const std::size_t n = static_cast<std::size_t>(g_.order());
    std::vector<std::vector<int>> level{std::vector<int>(n, 0)};
    for (int total = 1;; ++total) {
      std::vector<std::vector<int>> candidates;
      const std::uint64_t needed =
          static_cast<std::uint64_t>(level.size()) * others_.size();
      if (needed > options_.max_configs) {
        throw CapExceededError(options_.max_configs, needed, total, total - 1);
      }
      candidates.reserve(needed);
      for (const auto& base : level) {
        for (Vertex v : others_) {
          auto next = base;
          ++next[static_cast<std::size_t>(v)];
          candidates.push_back(std::move(next));
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());

      std::vector<char> unsolvable(candidates.size(), 0);
      const int workers = threads();
      run_workers(workers, [&](int w) {
        RootedSearch search(g_, root_);
        for (std::size_t i = static_cast<std::size_t>(w); i < candidates.size();
             i += static_cast<std::size_t>(workers)) {
          auto counts = candidates[i];
          unsolvable[i] = search.solve(counts, nullptr) ? 0 : 1;
        }
      });
      checked_ += candidates.size();

      std::vector<std::vector<int>> next_level;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (unsolvable[i]) next_level.push_back(std::move(candidates[i]));
      }
      if (next_level.empty()) {
        return PiResult{total, Configuration(std::move(level.front())), root_, 0};
      }
      level = std::move(next_level);
    }
  }

  const Graph& g_;
  Vertex root_;
  SolverOptions options_;
  RootedSearch probe_;
  std::vector<Vertex> others_;
  std::uint64_t checked_ = 0;
};

}  // namespace

std::uint64_t composition_count(int total, int parts) {
  if (parts <= 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, parts - 1), computed incrementally with saturation.
  const int k = parts - 1;
  unsigned __int128 acc = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(total + i) / static_cast<unsigned>(i);
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

Configuration apply_moves(const Graph& g, Configuration start,
                          std::span<const Move> moves) {
  require_matching(g, start);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto [from, to] = moves[i];
    if (!g.has_edge(from, to)) {
      throw ArgumentError("move " + std::to_string(i) + " (" +
                          std::to_string(from) + " -> " + std::to_string(to) +
                          ") is not along an edge");
    }
    if (start[from] < 2) {
      throw ArgumentError("move " + std::to_string(i) + " takes two pebbles from " +
                          std::to_string(from) + " which holds " +
                          std::to_string(start[from]));
    }
    start[from] -= 2;
    start[to] += 1;
  }
  return start;
}

SolveResult is_solvable(const Graph& g, const Configuration& c, Vertex root) {
  require_vertex(g, root, "root");
  require_matching(g, c);
  require_connected(g);
  RootedSearch search(g, root);
  std::vector<int> counts = c.counts();
  MoveSequence trail;
  SolveResult result;
  result.solvable = search.solve(counts, &trail);
  result.explored = search.explored();
  if (result.solvable) result.witness = std::move(trail);
  return result;
}

PiResult pi_rooted(const Graph& g, Vertex root, const SolverOptions& options) {
  require_vertex(g, root, "root");
  require_connected(g);
  return PiSearch(g, root, options).run();
}

PiResult pi_graph(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  if (g.order() == 0) throw ArgumentError("graph has no vertices");
  PiResult best;
  std::uint64_t checked = 0;
  for (Vertex r = 0; r < g.order(); ++r) {
    auto result = PiSearch(g, r, options).run();
    checked += result.configurations_checked;
    if (r == 0 || result.value > best.value) best = std::move(result);
  }
  best.configurations_checked = checked;
  return best;
}

MaxUnsolvable max_unsolvable(const Graph& g, Vertex root,
                             const SolverOptions& options) {
  auto result = pi_rooted(g, root, options);
  return {result.value - 1, std::move(result.critical_config)};
}

}  // namespace pebbling
