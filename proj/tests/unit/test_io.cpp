#include "doctest.h"

#include "catalog.hpp"
#include "pebbling/bounds.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/io.hpp"
#include "pebbling/verify.hpp"

#ifndef PEBBLING_TEST_DATA
#define PEBBLING_TEST_DATA "."
#endif

using namespace pebbling;
using io::json;
namespace f = pebbling::families;

TEST_CASE("configuration text") {
  const Configuration c(std::vector<int>{0, 0, 3, 0, 1});
  CHECK(io::format_configuration(c) == "2:3,4:1");
  CHECK(io::parse_configuration("2:3,4:1", 5) == c);
  CHECK(io::parse_configuration("", 3) == Configuration(3));
  CHECK(io::format_configuration(Configuration(3)).empty());
  CHECK_THROWS_AS(io::parse_configuration("4:1,2:3", 5), ParseError);
  CHECK_THROWS_AS(io::parse_configuration("2:3,2:1", 5), ParseError);
  CHECK_THROWS_AS(io::parse_configuration("7:1", 5), ParseError);
  CHECK_THROWS_AS(io::parse_configuration("1:-2", 5), ParseError);
  CHECK_THROWS_AS(io::parse_configuration("1:2,", 5), ParseError);
  CHECK_THROWS_AS(io::parse_configuration("a:b", 5), ParseError);
}

TEST_CASE("property: configuration text round trip") {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const Configuration conf(std::vector<int>{a, 0, b, c});
        CHECK(io::parse_configuration(io::format_configuration(conf), 4) == conf);
      }
    }
  }
}

TEST_CASE("strategy-set JSON round trip") {
  const Graph pet = f::petersen();
  const auto set = verify::reference_petersen_strategies();
  const json doc = io::strategy_set_to_json(set);
  CHECK(doc["root"] == 0);
  CHECK(doc["strategies"].size() == 3);
  CHECK(doc["strategies"][0]["weight"]["1"] == 4);
  CHECK(doc["strategies"][0]["parent"]["9"] == 6);
  const auto back = io::strategy_set_from_json(pet, json::parse(doc.dump()));
  CHECK(back.strategies() == set.strategies());

  const Graph q3 = f::hypercube(3);
  const auto generated = generate_strategies(q3, 5, BfsTrees{5, 2});
  CHECK(io::strategy_set_from_json(q3, io::strategy_set_to_json(generated)).strategies() ==
        generated.strategies());
}

TEST_CASE("strategy-set JSON derives missing weights and validates") {
  const Graph p3 = f::path(3);
  const auto set = io::strategy_set_from_json(
      p3, json::parse(R"({"root": 0, "strategies": [{"parent": {"1": 0, "2": 1}}]})"));
  CHECK(set.strategies()[0].weight() == std::map<Vertex, std::int64_t>{{1, 2}, {2, 1}});

  CHECK_THROWS_AS(io::strategy_set_from_json(
                      p3, json::parse(R"({"root": 0, "strategies": [{"parent": {"2": 0}}]})")),
                  ParseError);
  CHECK_THROWS_AS(
      io::strategy_set_from_json(
          p3, json::parse(R"({"root": 0, "strategies": [{"parent": {"1": 0, "2": 1},
                                                          "weight": {"1": 3, "2": 1}}]})")),
      ParseError);
  CHECK_THROWS_AS(io::strategy_set_from_json(p3, json::parse(R"({"strategies": []})")), Error);
  CHECK_THROWS_AS(io::strategy_set_from_json(
                      p3, json::parse(R"({"root": 0, "strategies": [{"parent": {"x": 0}}]})")),
                  Error);
}

TEST_CASE("strategy file on disk") {
  const Graph pet = f::petersen();
  const auto set = io::load_strategy_set(pet, std::string(PEBBLING_TEST_DATA) + "/petersen_reference.json");
  CHECK(set.strategies() == verify::reference_petersen_strategies().strategies());
  CHECK(kappa(pet, 0, set) == 4);
  CHECK(chi(set) == 36);
}

TEST_CASE("malformed strategy JSON reports the line") {
  const std::string path = "bad_strategies.json";
  io::write_file(path, "{\n  \"root\": 0,\n  \"strategies\": [\n    {\"parent\": {\"1\" 0}}\n  ]\n}\n");
  try {
    io::load_strategy_set(f::path(2), path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("reports") {
  SolveResult r;
  r.solvable = true;
  r.witness = MoveSequence{{2, 1}, {1, 0}};
  r.explored = 7;
  const json s = io::solve_report(r, 1.5);
  CHECK(s["solvable"] == true);
  CHECK(s["witness"] == json::parse("[[2,1],[1,0]]"));
  CHECK(s["explored"] == 7);
  CHECK(s.contains("elapsed_ms"));

  const Graph pet = f::petersen();
  const auto report = lp_bound(pet, 0, verify::reference_petersen_strategies());
  const json b = io::bound_report("petersen", report, BoundMethod::kRatio);
  CHECK(b["graph"] == "petersen");
  CHECK(b["overall_bound"] == 10);
  CHECK(b["per_root"][0]["kappa"] == 4);
  CHECK(b["per_root"][0]["chi"] == 36);
  CHECK(b["per_root"][0]["lp_value"] == to_string(report.lp_value));

  const auto all = bound_graph(f::path(4), BoundMethod::kRatio, AllPaths{1});
  const json failed = io::bound_report("path(4)", all);
  CHECK(failed["overall_bound"].is_null());
  CHECK(failed["per_root"][0].contains("error"));

  PathPartition p;
  p.paths = {{3, 1, 0}, {4, 1}};
  p.lengths = {2, 1};
  CHECK(io::partition_to_json(p) == json::parse("[[3,1,0],[4,1]]"));
}
