#include "pebbling/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "pebbling/bounds.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/lp.hpp"
#include "pebbling/oracles.hpp"
#include "pebbling/treepi.hpp"

namespace pebbling::verify {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(const VerifyOptions& options) : options_(options) {
    if (!options_.pi_rooted) options_.pi_rooted = &pebbling::pi_rooted;
  }

  std::vector<CheckResult> run() {
    add("C1", "paths: pi(P_n, endpoint) = 2^(n-1), n = 1..5", false, 10, [&] { return paths(); });
    add("C2", "complete graphs: pi(K_n) = n, n = 2..5", false, 10, [&] { return complete(); });
    add("C3", "cycles: pi(C_3..C_6) = 3, 4, 5, 8", false, 60, [&] { return cycles(); });
    add("C3-slow", "cycles: pi(C_7) = 11", true, 600, [&] { return cycle7(); });
    add("C4", "hypercubes: pi(Q_d) = 2^d, d = 2, 3", false, 300, [&] { return cubes(); });
    add("C5", "Petersen exact: pi(P) = 10", true, 1800, [&] { return petersen_exact(); });
    add("C6", "Petersen bound: greedy chi/kappa <= 9, ratio bound 10", false, 300,
        [&] { return petersen_bound(); });
    add("C7", "bound arithmetic: (4, 36) -> 10, (6, 395) -> 66", false, 10,
        [&] { return arithmetic(); });
    add("C8", "Bruhat B_4 bound: covering, finite, <= 80", false, 1800, [&] { return bruhat_bound(); });
    add("C9", "soundness: pi <= lp_bound <= ratio_bound on the catalog", false, 900,
        [&] { return soundness(); });
    add("C10", "weight function bound: no unsolvable config above unit weight", false, 900,
        [&] { return wfl(); });
    add("C11", "tree formula equals exhaustive pi on all trees with <= 7 vertices", false, 1200,
        [&] { return trees(); });
    add("C12", "simplex matches basic-point enumeration on <= 3 variables", false, 1,
        [&] { return simplex(); });
    return std::move(results_);
  }

 private:
  template <typename Fn>
  void add(std::string id, std::string name, bool slow, double budget, Fn&& fn) {
    if (!options_.only.empty()) {
      if (std::find(options_.only.begin(), options_.only.end(), id) == options_.only.end()) return;
    } else if (slow && options_.level == Level::kFast) {
      return;
    }
    CheckResult r{std::move(id), std::move(name), slow, false, "", 0, budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = fn();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.elapsed_seconds > budget) {
      r.passed = false;
      r.detail += " [over time budget]";
    }
    if (options_.progress) *options_.progress << format_line(r) << std::endl;
    results_.push_back(std::move(r));
  }

  PiResult pi_rooted(const Graph& g, Vertex r) const {
    return options_.pi_rooted(g, r, options_.solver);
  }

  int pi_graph(const Graph& g) const {
    int best = 0;
    for (Vertex r = 0; r < g.order(); ++r) best = std::max(best, pi_rooted(g, r).value);
    return best;
  }

  /// Compares computed values against expectations, listing every pair.
  static Outcome expect_all(const std::vector<std::pair<std::string, std::int64_t>>& got,
                            const std::vector<std::int64_t>& want) {
    Outcome o;
    std::ostringstream os;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (i) os << ", ";
      os << got[i].first << "=" << got[i].second;
      if (got[i].second != want[i]) {
        o.passed = false;
        os << " (want " << want[i] << ")";
      }
    }
    o.detail = os.str();
    return o;
  }

  Outcome paths() {
    std::vector<std::pair<std::string, std::int64_t>> got;
    std::vector<std::int64_t> want;
    for (int n = 1; n <= 5; ++n) {
      got.emplace_back("P" + std::to_string(n), pi_rooted(families::path(n), 0).value);
      want.push_back(std::int64_t{1} << (n - 1));
    }
    return expect_all(got, want);
  }

  Outcome complete() {
    std::vector<std::pair<std::string, std::int64_t>> got;
    std::vector<std::int64_t> want;
    for (int n = 2; n <= 5; ++n) {
      got.emplace_back("K" + std::to_string(n), pi_graph(families::complete(n)));
      want.push_back(n);
    }
    return expect_all(got, want);
  }

  /// 2^k for C_2k and 2 floor(2^(k+1) / 3) + 1 for C_(2k+1).
  static std::int64_t cycle_formula(int n) {
    const int k = n / 2;
    if (n % 2 == 0) return std::int64_t{1} << k;
    return 2 * ((std::int64_t{1} << (k + 1)) / 3) + 1;
  }

  Outcome cycles() {
    std::vector<std::pair<std::string, std::int64_t>> got;
    std::vector<std::int64_t> want;
    const std::int64_t published[] = {3, 4, 5, 8};
    for (int n = 3; n <= 6; ++n) {
      got.emplace_back("C" + std::to_string(n), pi_graph(families::cycle(n)));
      want.push_back(published[n - 3]);
    }
    auto o = expect_all(got, want);
    for (int n = 3; n <= 6; ++n) {
      if (cycle_formula(n) != published[n - 3]) o.passed = false;
    }
    return o;
  }

  Outcome cycle7() {
    return expect_all({{"C7", pi_graph(families::cycle(7))}}, {cycle_formula(7)});
  }

  Outcome cubes() {
    return expect_all({{"Q2", pi_graph(families::hypercube(2))},
                       {"Q3", pi_graph(families::hypercube(3))}},
                      {4, 8});
  }

  Outcome petersen_exact() {
    return expect_all({{"P", pi_graph(families::petersen())}}, {10});
  }

  Outcome petersen_bound() {
    const auto g = families::petersen();
    const auto set = generate_strategies(g, 0, GreedySearch{});
    const auto k = kappa(g, 0, set);
    const auto c = chi(set);
    const auto bound = ratio_bound_from(k, c);
    Outcome o;
    o.passed = c <= 9 * k && bound == 10;
    o.detail = "kappa=" + std::to_string(k) + " chi=" + std::to_string(c) +
               " strategies=" + std::to_string(set.size()) +
               " ratio_bound=" + std::to_string(bound);
    return o;
  }

  Outcome arithmetic() {
    const auto g = families::petersen();
    const auto set = reference_petersen_strategies();
    auto o = expect_all({{"ratio(4,36)", ratio_bound_from(4, 36)},
                         {"ratio(6,395)", ratio_bound_from(6, 395)},
                         {"kappa(ref)", kappa(g, 0, set)},
                         {"chi(ref)", chi(set)},
                         {"ratio(ref)", ratio_bound(g, 0, set)}},
                        {10, 66, 4, 36, 10});
    return o;
  }

  Outcome bruhat_bound() {
    const auto g = families::bruhat(4);
    const auto bounds = bound_graph(g, BoundMethod::kRatio, GreedySearch{},
                                    options_.solver.threads);
    Outcome o;
    std::int64_t worst_lp = 0;
    for (const auto& rb : bounds.per_root) {
      if (!rb.report) {
        o.passed = false;
        o.detail += "root " + std::to_string(rb.root) + ": " + rb.error + "; ";
        continue;
      }
      worst_lp = std::max(worst_lp, rb.report->lp_bound);
      if (rb.report->lp_bound > rb.report->ratio_bound) o.passed = false;
    }
    if (!bounds.overall) {
      o.passed = false;
      return o;
    }
    const auto b = *bounds.overall;
    if (b > 80) o.passed = false;
    o.detail += "overall ratio bound=" + std::to_string(b) +
                " lp bound=" + std::to_string(worst_lp) +
                (b <= 66 ? " (reproduces <= 66)" : " (within target 80, above 66)");
    return o;
  }

  struct CatalogEntry {
    std::string name;
    Graph graph;
  };

  static std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    for (int n = 2; n <= 5; ++n) out.push_back({"P" + std::to_string(n), families::path(n)});
    for (int n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), families::cycle(n)});
    for (int n = 2; n <= 5; ++n) out.push_back({"K" + std::to_string(n), families::complete(n)});
    out.push_back({"K1,3", families::star(3)});
    const int binary7[] = {families::kNoParent, 0, 0, 1, 1, 2, 2};
    out.push_back({"T7", families::tree_from_parents(binary7)});
    out.push_back({"Q2", families::hypercube(2)});
    out.push_back({"Q3", families::hypercube(3)});
    return out;
  }

  static std::vector<std::pair<std::string, GenerationMethod>> methods(const Graph& g, Vertex r) {
    const int ecc = eccentricity(g, r);
    return {{"all-paths(ecc)", AllPaths{ecc}},
            {"all-paths(ecc+1)", AllPaths{ecc + 1}},
            {"bfs-trees", BfsTrees{8, 1}},
            {"greedy-search", GreedySearch{}}};
  }

  Outcome soundness() {
    Outcome o;
    int instances = 0;
    for (const auto& [name, g] : catalog()) {
      for (Vertex r = 0; r < g.order(); ++r) {
        const int pi = pi_rooted(g, r).value;
        for (const auto& [method, gen] : methods(g, r)) {
          const auto set = generate_strategies(g, r, gen);
          const auto report = lp_bound(g, r, set);
          ++instances;
          if (!(pi <= report.lp_bound && report.lp_bound <= report.ratio_bound)) {
            o.passed = false;
            o.detail += name + " r=" + std::to_string(r) + " " + method +
                        ": pi=" + std::to_string(pi) +
                        " lp=" + std::to_string(report.lp_bound) +
                        " ratio=" + std::to_string(report.ratio_bound) + "; ";
          }
        }
      }
    }
    o.detail += std::to_string(instances) + " (graph, root, strategy set) instances";
    return o;
  }

  Outcome wfl() {
    Outcome o;
    std::uint64_t strategies = 0;
    std::uint64_t configs = 0;
    for (const auto& [name, g] : catalog()) {
      for (Vertex r = 0; r < g.order(); ++r) {
        const int pi = pi_rooted(g, r).value;
        std::set<std::map<Vertex, Vertex>> seen;
        for (const auto& [method, gen] : methods(g, r)) {
          const auto set = generate_strategies(g, r, gen);
          for (const auto& s : set.strategies()) {
            if (!seen.insert(s.parent()).second) continue;
            const auto check = wfl_oracle_check(g, r, s, pi - 1);
            ++strategies;
            configs += check.configurations_checked;
            if (!check.holds) {
              o.passed = false;
              o.detail += name + " r=" + std::to_string(r) + " counterexample; ";
            }
          }
        }
      }
    }
    o.detail += std::to_string(strategies) + " strategies, " + std::to_string(configs) +
                " configurations";
    return o;
  }

  Outcome trees() {
    Outcome o;
    int pairs = 0;
    int mismatches = 0;
    for (int n = 1; n <= 7; ++n) {
      for (const auto& parents : recursive_parent_arrays(n)) {
        const auto t = families::tree_from_parents(parents);
        for (Vertex r = 0; r < n; ++r) {
          ++pairs;
          const auto formula = pi_tree(t, r);
          const auto exact = pi_rooted(t, r).value;
          const auto witness = partition_witness(t, max_path_partition(t, r));
          const bool witness_ok =
              witness.total() == formula - 1 && !is_solvable(t, witness, r).solvable;
          if (formula != exact || !witness_ok) {
            ++mismatches;
            if (mismatches <= 5) {
              o.detail += "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                          " formula=" + std::to_string(formula) +
                          " exact=" + std::to_string(exact) +
                          (witness_ok ? "" : " bad witness") + "; ";
            }
          }
        }
      }
    }
    o.passed = mismatches == 0;
    o.detail += std::to_string(pairs) + " (tree, root) pairs, " +
                std::to_string(mismatches) + " mismatches";
    return o;
  }

  Outcome simplex() {
    Outcome o;
    int compared = 0;
    auto compare = [&](const LinearProgram& lp) {
      const auto sol = solve_max(lp);
      const auto oracle = oracles::enumerate_basic_points(lp);
      ++compared;
      if (sol.status != LpStatus::kOptimal || !oracle || sol.value != *oracle) {
        o.passed = false;
        o.detail += "LP " + std::to_string(compared) + " mismatch; ";
      }
    };
    for (const auto& lp : simplex_suite()) compare(lp);
    // Unbounded detection.
    LinearProgram free_lp(1, {Rational(1)});
    if (solve_max(free_lp).status != LpStatus::kUnbounded) {
      o.passed = false;
      o.detail += "unbounded LP not detected; ";
    }
    o.detail += std::to_string(compared) + " LPs compared";
    return o;
  }

 public:
  /// Fixed small LPs plus seeded random ones, each with <= 3 variables.
  static std::vector<LinearProgram> simplex_suite() {
    std::vector<LinearProgram> out;
    {
      LinearProgram lp(1, {Rational(1)});
      lp.add_constraint({Rational(2)}, Rational(12));
      out.push_back(lp);
    }
    {
      LinearProgram lp(2, {Rational(1), Rational(1)});
      lp.add_constraint({Rational(2), Rational(1)}, Rational(3));
      out.push_back(lp);
    }
    {
      LinearProgram lp(3, {Rational(1), Rational(1), Rational(1)});
      for (int i = 0; i < 3; ++i) {
        std::vector<Rational> row(3, Rational(0));
        row[static_cast<std::size_t>(i)] = 1;
        lp.add_constraint(row, Rational(1));
      }
      out.push_back(lp);
    }
    {
      // Degenerate vertex at the origin-adjacent corner.
      LinearProgram lp(2, {Rational(3), Rational(2)});
      lp.add_constraint({Rational(1), Rational(1)}, Rational(4));
      lp.add_constraint({Rational(1), Rational(3)}, Rational(6));
      lp.add_constraint({Rational(1), Rational(0)}, Rational(3));
      lp.add_constraint({Rational(1), Rational(-1)}, Rational(0));
      out.push_back(lp);
    }
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&](int lo, int hi) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return lo + static_cast<int>(state % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int trial = 0; trial < 60; ++trial) {
      const int n = next(1, 3);
      const int m = next(1, 4);
      std::vector<Rational> obj;
      for (int j = 0; j < n; ++j) obj.emplace_back(next(-2, 5), next(1, 3));
      LinearProgram lp(n, obj);
      // A bounding row keeps every instance bounded; it is one of the <= 4.
      lp.add_constraint(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)),
                        Rational(next(0, 12)));
      for (int i = 1; i < m; ++i) {
        std::vector<Rational> row;
        for (int j = 0; j < n; ++j) row.emplace_back(next(-3, 6), next(1, 2));
        lp.add_constraint(row, Rational(next(0, 10), next(1, 3)));
      }
      out.push_back(lp);
    }
    return out;
  }

 private:
  VerifyOptions options_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run(const VerifyOptions& options) {
  return Checker(options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

std::string format_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(8) << r.id << ' '
     << r.name << " (" << std::fixed << std::setprecision(2) << r.elapsed_seconds
     << "s / " << std::setprecision(0) << r.budget_seconds << "s)";
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) out += format_line(r) + "\n";
  return out;
}

StrategySet reference_petersen_strategies() {
  auto make = [](std::map<Vertex, Vertex> parent, Vertex top, std::set<Vertex> middle) {
    std::map<Vertex, std::int64_t> weight;
    for (const auto& [v, p] : parent) {
      weight[v] = v == top ? 4 : middle.contains(v) ? 2 : 1;
    }
    return Strategy(0, std::move(parent), std::move(weight));
  };
  return StrategySet(
      0, {make({{1, 0}, {2, 1}, {6, 1}, {3, 2}, {7, 2}, {8, 6}, {9, 6}}, 1, {2, 6}),
          make({{5, 0}, {7, 5}, {8, 5}, {9, 7}, {2, 7}, {6, 8}, {3, 8}}, 5, {7, 8}),
          make({{4, 0}, {3, 4}, {9, 4}, {2, 3}, {8, 3}, {6, 9}, {7, 9}}, 4, {3, 9})});
}

std::vector<std::vector<int>> recursive_parent_arrays(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  parents[0] = families::kNoParent;
  auto fill = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(parents);
      return;
    }
    for (int p = 0; p < i; ++p) {
      parents[static_cast<std::size_t>(i)] = p;
      self(self, i + 1);
    }
  };
  fill(fill, 1);
  return out;
}

}  // namespace pebbling::verify
