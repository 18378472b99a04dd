#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pebbling/bounds.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/io.hpp"
#include "pebbling/lp.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/strategy.hpp"
#include "pebbling/treepi.hpp"
#include "pebbling/verify.hpp"

namespace py = pybind11;
using namespace pebbling;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())),
                  py::int_(py::str(q.get_den().get_str())));
}

Rational from_python(const py::handle& h) {
  return parse_rational(py::str(h).cast<std::string>());
}

Configuration as_config(const Graph& g, const std::vector<int>& counts) {
  Configuration c(counts);
  require_matching(g, c);
  return c;
}

SolverOptions solver_options(std::uint64_t max_configs, int threads) {
  SolverOptions o;
  o.max_configs = max_configs;
  o.threads = threads;
  return o;
}

GenerationMethod method_of(const Graph& g, Vertex root, const std::string& method,
                           std::optional<int> max_length, int max_trees, std::uint64_t seed) {
  if (method == "paths") {
    return AllPaths{max_length ? *max_length : std::max(1, eccentricity(g, root))};
  }
  if (method == "bfs") return BfsTrees{max_trees, seed};
  if (method == "greedy") return GreedySearch{4096, 200, seed};
  throw ArgumentError("unknown method '" + method + "'; expected paths, bfs or greedy");
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["root"] = r.root;
  d["kappa"] = r.kappa;
  d["chi"] = r.chi;
  d["ratio_bound"] = r.ratio_bound;
  d["lp_value"] = to_fraction(r.lp_value);
  d["lp_bound"] = r.lp_bound;
  d["strategy_count"] = r.strategy_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph pebbling: exact pebbling numbers, strategy bounds, tree formula";

  auto base = py::register_exception<Error>(m, "PebblingError", PyExc_ValueError);
  py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             require_vertex(g, v, "vertex");
             auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("degree", [](const Graph& g, Vertex v) {
        require_vertex(g, v, "vertex");
        return g.degree(v);
      })
      .def("edges", &Graph::edges)
      .def("to_edge_list", &io::write_edge_list)
      .def_static("from_edge_list", [](const std::string& text) { return io::read_edge_list(text); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("eccentricity", &eccentricity);
  m.def("is_connected", &is_connected);
  m.def("distance", &distance);

  auto fam = m.def_submodule("families", "Graph family generators");
  fam.def("path", &families::path);
  fam.def("cycle", &families::cycle);
  fam.def("complete", &families::complete);
  fam.def("hypercube", &families::hypercube);
  fam.def("petersen", &families::petersen);
  fam.def("bruhat", &families::bruhat);
  fam.def("star", &families::star);
  fam.def("tree", [](const std::vector<int>& parents) {
    return families::tree_from_parents(parents);
  });

  m.def(
      "is_solvable",
      [](const Graph& g, const std::vector<int>& counts, Vertex root) {
        const auto r = is_solvable(g, as_config(g, counts), root);
        py::object moves = py::none();
        if (r.witness) {
          py::list l;
          for (const auto& mv : *r.witness) l.append(py::make_tuple(mv.from, mv.to));
          moves = l;
        }
        return py::make_tuple(r.solvable, moves);
      },
      py::arg("graph"), py::arg("config"), py::arg("root"),
      "Returns (solvable, moves); moves is a list of (from, to) or None.");

  m.def(
      "pi_rooted",
      [](const Graph& g, Vertex root, std::uint64_t max_configs, int threads) {
        const auto r = pi_rooted(g, root, solver_options(max_configs, threads));
        return py::make_tuple(r.value, r.critical_config.counts());
      },
      py::arg("graph"), py::arg("root"), py::arg("max_configs") = SolverOptions{}.max_configs,
      py::arg("threads") = 1, "Returns (pi, critical configuration).");

  m.def(
      "pi_graph",
      [](const Graph& g, std::uint64_t max_configs, int threads) {
        const auto r = pi_graph(g, solver_options(max_configs, threads));
        return py::make_tuple(r.value, r.root);
      },
      py::arg("graph"), py::arg("max_configs") = SolverOptions{}.max_configs,
      py::arg("threads") = 1, "Returns (pi, maximising root).");

  m.def(
      "max_unsolvable",
      [](const Graph& g, Vertex root) {
        const auto r = max_unsolvable(g, root);
        return py::make_tuple(r.size, r.witness.counts());
      },
      py::arg("graph"), py::arg("root"));

  m.def(
      "generate_strategies",
      [](const Graph& g, Vertex root, const std::string& method, std::optional<int> max_length,
         int max_trees, std::uint64_t seed) {
        const auto set =
            generate_strategies(g, root, method_of(g, root, method, max_length, max_trees, seed));
        return io::strategy_set_to_json(set).dump();
      },
      py::arg("graph"), py::arg("root"), py::arg("method") = "greedy",
      py::arg("max_length") = py::none(), py::arg("max_trees") = 16, py::arg("seed") = 1,
      "Strategy set as the JSON text used by strategy files.");

  m.def(
      "bound",
      [](const Graph& g, Vertex root, const std::string& strategies_json) {
        const auto set = io::strategy_set_from_json(g, io::json::parse(strategies_json));
        return report_dict(lp_bound(g, root, set));
      },
      py::arg("graph"), py::arg("root"), py::arg("strategies"),
      "kappa, chi, ratio bound and LP bound for a strategy-set JSON text.");

  m.def(
      "bound_graph",
      [](const Graph& g, const std::string& method, const std::string& bound, int threads) {
        const auto b = bound_graph(g, bound == "lp" ? BoundMethod::kLp : BoundMethod::kRatio,
                                   method_of(g, 0, method, std::nullopt, 16, 1), threads);
        py::list per_root;
        for (const auto& rb : b.per_root) {
          if (rb.report) {
            per_root.append(report_dict(*rb.report));
          } else {
            py::dict d;
            d["root"] = rb.root;
            d["error"] = rb.error;
            per_root.append(d);
          }
        }
        py::object overall = py::none();
        if (b.overall) overall = py::int_(*b.overall);
        return py::make_tuple(per_root, overall);
      },
      py::arg("graph"), py::arg("method") = "greedy", py::arg("bound") = "ratio",
      py::arg("threads") = 1, "Returns (per-root reports, overall bound or None).");

  m.def("ratio_bound_from", &ratio_bound_from, py::arg("kappa"), py::arg("chi"));

  m.def(
      "solve_lp",
      [](const std::vector<py::object>& objective,
         const std::vector<std::pair<std::vector<py::object>, py::object>>& constraints) {
        std::vector<Rational> obj;
        for (const auto& c : objective) obj.push_back(from_python(c));
        LinearProgram lp(static_cast<int>(obj.size()), obj);
        for (const auto& [row, rhs] : constraints) {
          std::vector<Rational> r;
          for (const auto& a : row) r.push_back(from_python(a));
          lp.add_constraint(r, from_python(rhs));
        }
        const auto s = solve_max(lp);
        if (s.status == LpStatus::kUnbounded) {
          return py::tuple(py::make_tuple("unbounded", py::none(), py::none()));
        }
        py::list x;
        for (const auto& v : s.point) x.append(to_fraction(v));
        return py::tuple(py::make_tuple("optimal", to_fraction(s.value), x));
      },
      py::arg("objective"), py::arg("constraints"),
      "Maximise objective.x subject to row.x <= rhs, x >= 0, in exact arithmetic. "
      "Returns (status, value, point) with Fraction entries.");

  m.def("pi_tree", &pi_tree, py::arg("tree"), py::arg("root"));
  m.def(
      "path_partition",
      [](const Graph& t, Vertex root) { return max_path_partition(t, root).paths; },
      py::arg("tree"), py::arg("root"));

  m.def(
      "verify",
      [](bool full) {
        verify::VerifyOptions o;
        o.level = full ? verify::Level::kFull : verify::Level::kFast;
        std::vector<verify::CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verify::run(o);
        }
        py::list out;
        for (const auto& r : results) out.append(py::make_tuple(r.id, r.passed, r.detail));
        return out;
      },
      py::arg("full") = false);
}
