#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pebbling/bounds.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/io.hpp"
#include "pebbling/lp.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/strategy.hpp"
#include "pebbling/treepi.hpp"
#include "pebbling/verify.hpp"

namespace pebbling::cli {

namespace {

using io::json;

int default_threads() {
  if (const char* env = std::getenv("PEBBLING_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Thrown for argument combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph;
  std::optional<int> root;
  bool json = false;
  std::string out;
};

struct GenerationArgs {
  std::string method = "greedy";
  std::optional<int> max_length;
  int max_trees = 16;
  std::uint64_t seed = 1;
  int budget = 4096;
  int rounds = 200;
};

void add_generation(CLI::App* cmd, GenerationArgs& g) {
  cmd->add_option("--method", g.method, "Strategy generation: paths, bfs, greedy")
      ->check(CLI::IsMember({"paths", "bfs", "greedy"}));
  cmd->add_option("--max-length", g.max_length,
                  "Longest path for --method paths (default: eccentricity of the root)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-trees", g.max_trees, "Tree count for --method bfs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", g.seed, "Seed for bfs and greedy");
  cmd->add_option("--budget", g.budget, "Largest strategy multiplicity for greedy")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rounds", g.rounds, "Column-generation rounds for greedy")
      ->check(CLI::NonNegativeNumber);
}

GenerationMethod generation_of(const GenerationArgs& a, const Graph& g, Vertex root) {
  if (a.method == "paths") {
    return AllPaths{a.max_length ? *a.max_length : std::max(1, eccentricity(g, root))};
  }
  if (a.method == "bfs") return BfsTrees{a.max_trees, a.seed};
  return GreedySearch{a.budget, a.rounds, a.seed};
}

Graph load_graph(const std::string& path) {
  try {
    return io::load_graph(path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

StrategySet load_strategies(const Graph& g, const std::string& path) {
  try {
    return io::load_strategy_set(g, path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Vertex require_root(const Common& c, const Graph& g) {
  if (!c.root) throw UsageError("--root is required");
  require_vertex(g, *c.root, "root");
  return *c.root;
}

void emit(std::ostream& out, const Common& c, const json& report, const std::string& text) {
  if (!c.out.empty()) io::write_file(c.out, report.dump(2) + "\n");
  if (c.json) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::string format_moves(const MoveSequence& moves) {
  std::string s;
  for (const auto& m : moves) {
    if (!s.empty()) s += ' ';
    s += std::to_string(m.from) + "->" + std::to_string(m.to);
  }
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph pebbling workbench", "pebbling"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  int threads = default_threads();
  std::uint64_t max_configs = SolverOptions{}.max_configs;
  std::string enumeration = "auto";
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Worker threads (default: $PEBBLING_THREADS or cores)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-configs", max_configs, "Per-level enumeration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--enumeration", enumeration, "auto, level or frontier")
        ->check(CLI::IsMember({"auto", "level", "frontier"}));
  };
  auto add_common = [](CLI::App* cmd, Common& c, bool graph_required) {
    auto* g = cmd->add_option("--graph", c.graph, "Edge-list file");
    if (graph_required) g->required();
    cmd->add_flag("--json", c.json, "Print the JSON report");
    cmd->add_option("--out", c.out, "Also write the report to this file");
  };

  // family
  auto* family = app.add_subcommand("family", "Write a family member as an edge list");
  families::FamilySpec spec;
  std::string parents_text;
  Common family_c;
  family->add_option("--kind", spec.kind, "path, cycle, complete, hypercube, petersen, bruhat, tree")
      ->required();
  family->add_option("--size", spec.size, "n, or d for hypercube");
  family->add_option("--parents", parents_text, "Comma-separated parent array for tree; -1 marks the root");
  family->add_flag("--json", family_c.json, "Print a JSON description");
  family->add_option("--out", family_c.out, "Write the edge list to this file");

  // solve
  auto* solve = app.add_subcommand("solve", "Decide whether a configuration reaches the root");
  Common solve_c;
  std::string config_text;
  std::string config_file;
  add_common(solve, solve_c, true);
  solve->add_option("--root", solve_c.root, "Target vertex")->required();
  auto* config_opt = solve->add_option("--config", config_text, "Configuration, e.g. 2:3,4:1");
  auto* config_file_opt = solve->add_option("--config-file", config_file, "Configuration file");
  config_opt->excludes(config_file_opt);

  // pi
  auto* pi = app.add_subcommand("pi", "Exact pebbling number; all roots when --root is omitted");
  Common pi_c;
  add_common(pi, pi_c, true);
  pi->add_option("--root", pi_c.root, "Target vertex");
  std::string critical_out;
  pi->add_option("--critical-out", critical_out, "Write the critical configuration to this file");
  add_solver(pi);

  // max-unsolvable
  auto* maxu = app.add_subcommand("max-unsolvable", "Largest unsolvable configuration");
  Common maxu_c;
  add_common(maxu, maxu_c, true);
  maxu->add_option("--root", maxu_c.root, "Target vertex")->required();
  std::string witness_out;
  maxu->add_option("--witness-out", witness_out, "Write the witness configuration to this file");
  add_solver(maxu);

  // strategies
  auto* strat = app.add_subcommand("strategies", "Generate a strategy set");
  Common strat_c;
  GenerationArgs strat_g;
  strat->add_option("--graph", strat_c.graph, "Edge-list file")->required();
  strat->add_option("--root", strat_c.root, "Target vertex")->required();
  strat->add_option("--out", strat_c.out, "Write the strategy-set JSON here instead of stdout");
  add_generation(strat, strat_g);

  // bound
  auto* bound = app.add_subcommand("bound", "Weight-function upper bounds");
  Common bound_c;
  GenerationArgs bound_g;
  std::string bound_strategies;
  std::string bound_method = "ratio";
  add_common(bound, bound_c, true);
  bound->add_option("--root", bound_c.root, "Target vertex; all roots when omitted");
  bound->add_option("--strategies", bound_strategies, "Strategy-set JSON (needs --root)");
  bound->add_option("--bound", bound_method, "Bound reported as overall: ratio or lp")
      ->check(CLI::IsMember({"ratio", "lp"}));
  add_generation(bound, bound_g);
  bound->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // lp
  auto* lp = app.add_subcommand("lp", "Solve the linear relaxation of a strategy set");
  Common lp_c;
  GenerationArgs lp_g;
  std::string lp_strategies;
  bool lp_trace = false;
  add_common(lp, lp_c, true);
  lp->add_option("--root", lp_c.root, "Target vertex")->required();
  lp->add_option("--strategies", lp_strategies, "Strategy-set JSON");
  lp->add_flag("--trace", lp_trace, "Dump the dictionary after each pivot to stderr");
  add_generation(lp, lp_g);

  // tree-pi
  auto* tree = app.add_subcommand("tree-pi", "Pebbling number of a tree by path partition");
  Common tree_c;
  add_common(tree, tree_c, true);
  tree->add_option("--root", tree_c.root, "Target vertex; maximum over roots when omitted");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the reproduction checks");
  std::string level = "fast";
  Common ver_c;
  ver->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  std::vector<std::string> only;
  ver->add_option("--only", only, "Run only these check ids, e.g. --only C1 C7");
  ver->add_flag("--json", ver_c.json, "Print results as JSON");
  ver->add_option("--out", ver_c.out, "Also write the JSON results here");
  ver->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--max-configs", max_configs, "Per-level enumeration cap")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  SolverOptions solver;
  solver.threads = threads;
  solver.max_configs = max_configs;
  solver.enumeration = enumeration == "level"      ? Enumeration::kLevelScan
                       : enumeration == "frontier" ? Enumeration::kFrontier
                                                   : Enumeration::kAuto;

  try {
    if (family->parsed()) {
      if (!parents_text.empty()) {
        std::stringstream ss(parents_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            std::size_t used = 0;
            spec.parents.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
          } catch (const std::exception&) {
            throw UsageError("--parents: not an integer: '" + item + "'");
          }
        }
      }
      const Graph g = families::make(spec);
      const std::string text = io::write_edge_list(g);
      if (!family_c.out.empty()) io::write_file(family_c.out, text);
      if (family_c.json) {
        json doc = {{"graph", families::describe(spec)},
                    {"order", g.order()},
                    {"edge_count", g.edge_count()},
                    {"edges", g.edges()}};
        out << doc.dump(2) << "\n";
      } else if (family_c.out.empty()) {
        out << text;
      } else {
        out << families::describe(spec) << ": " << g.order() << " vertices, "
            << g.edge_count() << " edges -> " << family_c.out << "\n";
      }
      return 0;
    }

    if (solve->parsed()) {
      const Graph g = load_graph(solve_c.graph);
      const Vertex root = require_root(solve_c, g);
      if (config_opt->count() == 0 && config_file_opt->count() == 0) {
        throw UsageError("one of --config or --config-file is required");
      }
      Configuration c(g.order());
      if (config_opt->count()) {
        c = io::parse_configuration(config_text, g.order());
      } else {
        std::string text = io::read_file(config_file);
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        try {
          c = io::parse_configuration(text, g.order());
        } catch (const ParseError& e) {
          throw Error(config_file + ": " + e.what());
        }
      }
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = is_solvable(g, c, root);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      std::ostringstream text;
      text << (r.solvable ? "solvable" : "unsolvable") << "\n";
      if (r.witness) text << "moves: " << format_moves(*r.witness) << "\n";
      text << "explored: " << r.explored << "\n";
      emit(out, solve_c, io::solve_report(r, ms), text.str());
      return 0;
    }

    if (pi->parsed()) {
      const Graph g = load_graph(pi_c.graph);
      PiResult r;
      if (pi_c.root) {
        require_vertex(g, *pi_c.root, "root");
        r = pi_rooted(g, *pi_c.root, solver);
      } else {
        r = pi_graph(g, solver);
      }
      const std::string critical = io::format_configuration(r.critical_config);
      if (!critical_out.empty()) io::write_file(critical_out, critical + "\n");
      json report = {{"graph", pi_c.graph},
                     {"root", r.root},
                     {"all_roots", !pi_c.root.has_value()},
                     {"value", r.value},
                     {"critical_config", critical},
                     {"configurations_checked", r.configurations_checked}};
      std::ostringstream text;
      text << r.value << "\n"
           << "root: " << r.root << (pi_c.root ? "" : " (maximising)") << "\n"
           << "critical configuration: " << critical << "\n"
           << "configurations checked: " << r.configurations_checked << "\n";
      emit(out, pi_c, report, text.str());
      return 0;
    }

    if (maxu->parsed()) {
      const Graph g = load_graph(maxu_c.graph);
      const Vertex root = require_root(maxu_c, g);
      const MaxUnsolvable r = max_unsolvable(g, root, solver);
      const std::string witness = io::format_configuration(r.witness);
      if (!witness_out.empty()) io::write_file(witness_out, witness + "\n");
      json report = {{"graph", maxu_c.graph}, {"root", root}, {"size", r.size},
                     {"witness", witness}};
      emit(out, maxu_c, report,
           std::to_string(r.size) + "\nwitness: " + witness + "\n");
      return 0;
    }

    if (strat->parsed()) {
      const Graph g = load_graph(strat_c.graph);
      const Vertex root = require_root(strat_c, g);
      const StrategySet set = generate_strategies(g, root, generation_of(strat_g, g, root));
      const std::string doc = io::strategy_set_to_json(set).dump(2) + "\n";
      if (strat_c.out.empty()) {
        out << doc;
      } else {
        io::write_file(strat_c.out, doc);
        out << set.size() << " strategies -> " << strat_c.out << "\n";
      }
      return 0;
    }

    if (bound->parsed()) {
      const Graph g = load_graph(bound_c.graph);
      const BoundMethod method = bound_method == "lp" ? BoundMethod::kLp : BoundMethod::kRatio;
      auto line = [](const BoundReport& r) {
        return "root " + std::to_string(r.root) + ": kappa=" + std::to_string(r.kappa) +
               " chi=" + std::to_string(r.chi) + " ratio_bound=" + std::to_string(r.ratio_bound) +
               " lp_value=" + to_string(r.lp_value) + " lp_bound=" + std::to_string(r.lp_bound) +
               " strategies=" + std::to_string(r.strategy_count) + "\n";
      };
      if (!bound_strategies.empty() || bound_c.root) {
        const Vertex root = require_root(bound_c, g);
        const StrategySet set = bound_strategies.empty()
                                    ? generate_strategies(g, root, generation_of(bound_g, g, root))
                                    : load_strategies(g, bound_strategies);
        if (set.root() != root) {
          throw ArgumentError("strategy set is rooted at " + std::to_string(set.root()) +
                              ", not " + std::to_string(root));
        }
        const BoundReport r = lp_bound(g, root, set);
        const auto overall = method == BoundMethod::kRatio ? r.ratio_bound : r.lp_bound;
        emit(out, bound_c, io::bound_report(bound_c.graph, r, method),
             line(r) + "bound: " + std::to_string(overall) + "\n");
        return 0;
      }
      GenerationMethod gen = generation_of(bound_g, g, 0);
      if (bound_g.method == "paths" && !bound_g.max_length) {
        require_connected(g);
        int diameter = 1;
        for (Vertex v = 0; v < g.order(); ++v) diameter = std::max(diameter, eccentricity(g, v));
        gen = AllPaths{diameter};
      }
      const GraphBounds b = bound_graph(g, method, gen, threads);
      std::string text;
      for (const auto& rb : b.per_root) {
        text += rb.report ? line(*rb.report)
                          : "root " + std::to_string(rb.root) + ": error: " + rb.error + "\n";
      }
      text += "bound: " + (b.overall ? std::to_string(*b.overall) : std::string("none")) + "\n";
      emit(out, bound_c, io::bound_report(bound_c.graph, b), text);
      return b.overall ? 0 : 1;
    }

    if (lp->parsed()) {
      const Graph g = load_graph(lp_c.graph);
      const Vertex root = require_root(lp_c, g);
      const StrategySet set = lp_strategies.empty()
                                  ? generate_strategies(g, root, generation_of(lp_g, g, root))
                                  : load_strategies(g, lp_strategies);
      const LinearProgram program = build_relaxation(g, root, set);
      const LpSolution s = solve_max(program, lp_trace ? &err : nullptr);
      const auto vars = relaxation_vertices(g, root);
      json point = json::object();
      json dual = json::array();
      std::ostringstream text;
      if (s.status == LpStatus::kUnbounded) {
        text << "unbounded\n";
      } else {
        text << "z = " << to_string(s.value) << "\n"
             << "bound: " << floor_to_int(s.value) + 1 << "\n";
        text << "x:";
        for (std::size_t i = 0; i < vars.size(); ++i) {
          point[std::to_string(vars[i])] = to_string(s.point[i]);
          text << ' ' << vars[i] << '=' << to_string(s.point[i]);
        }
        text << "\ny:";
        for (const auto& y : s.dual) {
          dual.push_back(to_string(y));
          text << ' ' << to_string(y);
        }
        text << "\npivots: " << s.pivot_count << "\n";
      }
      json report = {{"graph", lp_c.graph},
                     {"root", root},
                     {"status", s.status == LpStatus::kOptimal ? "optimal" : "unbounded"},
                     {"value", to_string(s.value)},
                     {"point", point},
                     {"dual", dual},
                     {"pivots", s.pivot_count}};
      if (s.status == LpStatus::kOptimal) report["bound"] = floor_to_int(s.value) + 1;
      emit(out, lp_c, report, text.str());
      return 0;
    }

    if (tree->parsed()) {
      const Graph g = load_graph(tree_c.graph);
      Vertex root = 0;
      std::int64_t value = 0;
      if (tree_c.root) {
        root = require_root(tree_c, g);
        value = pi_tree(g, root);
      } else {
        const TreePi t = pi_tree_all(g);
        root = t.root;
        value = t.value;
      }
      const PathPartition p = max_path_partition(g, root);
      json report = {{"graph", tree_c.graph},
                     {"root", root},
                     {"value", value},
                     {"partition", io::partition_to_json(p)}};
      std::ostringstream text;
      text << value << "\nroot: " << root << "\n";
      for (const auto& path : p.paths) {
        text << "path:";
        for (Vertex v : path) text << ' ' << v;
        text << "\n";
      }
      emit(out, tree_c, report, text.str());
      return 0;
    }

    if (ver->parsed()) {
      verify::VerifyOptions options;
      options.level = level == "full" ? verify::Level::kFull : verify::Level::kFast;
      options.solver = solver;
      options.only = only;
      if (!ver_c.json) options.progress = &out;
      const auto results = verify::run(options);
      json doc = json::array();
      for (const auto& r : results) {
        doc.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"elapsed_seconds", r.elapsed_seconds},
                       {"budget_seconds", r.budget_seconds}});
      }
      if (!ver_c.out.empty()) io::write_file(ver_c.out, doc.dump(2) + "\n");
      const bool ok = verify::all_passed(results);
      if (ver_c.json) {
        out << doc.dump(2) << "\n";
      } else {
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
      }
      if (!ok) {
        for (const auto& r : results) {
          if (!r.passed) err << "failed: " << r.id << " " << r.name << "\n";
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pebbling::cli
