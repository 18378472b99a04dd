#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "pebbling/io.hpp"

#ifndef PEBBLING_TEST_DATA
#define PEBBLING_TEST_DATA "."
#endif

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"pebbling"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = pebbling::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PEBBLING_TEST_DATA) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("family writes edge lists") {
  const auto r = cli({"family", "--kind", "petersen"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "10 15");
  CHECK(r.out == pebbling::io::read_file(data("petersen.txt")));

  const auto t = cli({"family", "--kind", "tree", "--parents", "-1,0,0,1,1,2,2", "--json"});
  CHECK(t.code == 0);
  const auto doc = json::parse(t.out);
  CHECK(doc["order"] == 7);
  CHECK(doc["edge_count"] == 6);

  CHECK(cli({"family", "--kind", "wheel", "--size", "5"}).code == 1);
  CHECK(cli({"family", "--kind", "cycle", "--size", "2"}).code == 1);
  CHECK(cli({"family", "--kind", "tree", "--parents", "-1,x"}).code == 2);
}

TEST_CASE("pi on C5 and the Petersen graph") {
  const auto r = cli({"pi", "--graph", data("c5.txt")});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "5");
  const auto p = cli({"pi", "--graph", data("petersen.txt"), "--root", "3", "--json"});
  CHECK(p.code == 0);
  const auto doc = json::parse(p.out);
  CHECK(doc["value"] == 10);
  CHECK(doc["root"] == 3);
}

TEST_CASE("bound with a stored strategy file") {
  const auto r = cli({"bound", "--graph", data("petersen.txt"), "--root", "0", "--strategies",
                      data("petersen_reference.json"), "--json"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["per_root"][0]["kappa"] == 4);
  CHECK(doc["per_root"][0]["chi"] == 36);
  CHECK(doc["overall_bound"] == 10);
  CHECK(doc["per_root"][0]["lp_value"].is_string());

  const auto text = cli({"bound", "--graph", data("petersen.txt"), "--root", "0", "--strategies",
                         data("petersen_reference.json")});
  CHECK(text.out.find("kappa=4 chi=36") != std::string::npos);
  CHECK(text.out.find("bound: 10") != std::string::npos);
}

TEST_CASE("bound over all roots") {
  const auto r = cli({"bound", "--graph", data("c5.txt"), "--method", "paths", "--json"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["per_root"].size() == 5);
  CHECK(doc["overall_bound"].get<int>() >= 5);

  const auto fail = cli({"family", "--kind", "path", "--size", "4", "--out", "p4.txt"});
  REQUIRE(fail.code == 0);
  const auto partial = cli({"bound", "--graph", "p4.txt", "--method", "paths", "--max-length", "1",
                            "--json"});
  CHECK(partial.code == 1);
  CHECK(json::parse(partial.out)["overall_bound"].is_null());
}

TEST_CASE("round trip: files written by the CLI are read back") {
  REQUIRE(cli({"family", "--kind", "hypercube", "--size", "3", "--out", "q3.txt"}).code == 0);
  REQUIRE(cli({"strategies", "--graph", "q3.txt", "--root", "0", "--method", "bfs", "--out",
               "q3_strategies.json"})
              .code == 0);
  const auto b = cli({"bound", "--graph", "q3.txt", "--root", "0", "--strategies",
                      "q3_strategies.json", "--json", "--out", "q3_bound.json"});
  CHECK(b.code == 0);
  CHECK(json::parse(pebbling::io::read_file("q3_bound.json")) == json::parse(b.out));

  const auto pi = cli({"pi", "--graph", "q3.txt", "--root", "0", "--critical-out", "q3_critical.txt"});
  REQUIRE(pi.code == 0);
  CHECK(first_line(pi.out) == "8");
  const auto s = cli({"solve", "--graph", "q3.txt", "--root", "0", "--config-file", "q3_critical.txt",
                      "--json"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["solvable"] == false);

  const auto m = cli({"max-unsolvable", "--graph", "q3.txt", "--root", "0", "--witness-out",
                      "q3_witness.txt"});
  CHECK(first_line(m.out) == "7");
  CHECK(first_line(cli({"solve", "--graph", "q3.txt", "--root", "0", "--config-file",
                        "q3_witness.txt"})
                       .out) == "unsolvable");
}

TEST_CASE("json output is stable apart from elapsed time") {
  auto strip = [](std::string s) {
    return std::regex_replace(s, std::regex(R"("elapsed_ms": [0-9.e+-]+)"), "");
  };
  for (const auto& args :
       {std::initializer_list<std::string>{"solve", "--graph", data("c5.txt"), "--root", "0",
                                           "--config", "2:3,3:2", "--json"},
        std::initializer_list<std::string>{"bound", "--graph", data("petersen.txt"), "--root", "0",
                                           "--json"},
        std::initializer_list<std::string>{"pi", "--graph", data("c5.txt"), "--json"}}) {
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(strip(a.out) == strip(b.out));
  }
}

TEST_CASE("solve reports witnesses; unsolvable is not an error") {
  const auto yes = cli({"solve", "--graph", data("c5.txt"), "--root", "0", "--config", "2:3,3:2"});
  CHECK(yes.code == 0);
  CHECK(first_line(yes.out) == "solvable");
  const auto no = cli({"solve", "--graph", data("c5.txt"), "--root", "0", "--config", "2:1"});
  CHECK(no.code == 0);
  CHECK(first_line(no.out) == "unsolvable");
  const auto doc = json::parse(
      cli({"solve", "--graph", data("c5.txt"), "--root", "0", "--config", "2:4", "--json"}).out);
  CHECK(doc["witness"].size() == 3);
}

TEST_CASE("lp and tree-pi verbs") {
  const auto lp = cli({"lp", "--graph", data("petersen.txt"), "--root", "0", "--strategies",
                       data("petersen_reference.json"), "--json"});
  CHECK(lp.code == 0);
  const auto doc = json::parse(lp.out);
  CHECK(doc["status"] == "optimal");
  CHECK(doc["bound"].get<int>() <= 10);

  REQUIRE(cli({"family", "--kind", "tree", "--parents", "-1,0,0,1,1,2,2", "--out", "t7.txt"}).code == 0);
  const auto t = cli({"tree-pi", "--graph", "t7.txt", "--root", "0", "--json"});
  CHECK(t.code == 0);
  const auto tdoc = json::parse(t.out);
  CHECK(tdoc["value"] == 9);
  CHECK(tdoc["partition"] == json::parse("[[3,1,0],[4,1],[5,2,0],[6,2]]"));
  CHECK(cli({"tree-pi", "--graph", data("c5.txt"), "--root", "0"}).code == 1);
}

TEST_CASE("usage and domain errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"pi"}).code == 2);
  CHECK(cli({"pi", "--graph", data("c5.txt"), "--bogus"}).code == 2);
  CHECK(cli({"solve", "--graph", data("c5.txt"), "--config", "1:1"}).code == 2);
  CHECK(cli({"solve", "--graph", data("c5.txt"), "--root", "0"}).code == 2);
  CHECK(cli({"strategies", "--graph", data("c5.txt")}).code == 2);
  CHECK(cli({"lp", "--graph", data("c5.txt")}).code == 2);
  CHECK(cli({"bound", "--graph", data("c5.txt"), "--strategies", data("petersen_reference.json")}).code == 2);
  CHECK(cli({"pi", "--graph", data("c5.txt"), "--root", "9"}).code == 1);
  CHECK(cli({"pi", "--graph", "missing.txt"}).code == 1);
  CHECK(cli({"--help"}).code == 0);

  pebbling::io::write_file("broken.txt", "3 2\n0 1\n1 z\n");
  const auto broken = cli({"pi", "--graph", "broken.txt"});
  CHECK(broken.code == 1);
  CHECK(broken.err.find("line 3") != std::string::npos);

  const auto cap = cli({"pi", "--graph", data("petersen.txt"), "--root", "0", "--max-configs", "10",
                        "--enumeration", "level"});
  CHECK(cap.code == 1);
  CHECK(cap.err.find("10") != std::string::npos);
}

TEST_CASE("verify runs selected checks") {
  const auto r = cli({"verify", "--only", "C1", "C7", "C12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS C1") != std::string::npos);
  CHECK(r.out.find("PASS C7") != std::string::npos);
  CHECK(r.out.find("PASS C12") != std::string::npos);
}
