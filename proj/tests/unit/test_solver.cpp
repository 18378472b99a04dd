#include "doctest.h"

#include <functional>

#include "catalog.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/oracles.hpp"
#include "pebbling/solver.hpp"

using namespace pebbling;
namespace f = pebbling::families;

namespace {

Configuration config(std::vector<int> counts) { return Configuration(std::move(counts)); }

void check_witness(const Graph& g, const Configuration& c, Vertex root, const SolveResult& r) {
  REQUIRE(r.solvable);
  REQUIRE(r.witness.has_value());
  const Configuration end = apply_moves(g, c, *r.witness);
  CHECK(end[root] >= 1);
}

/// Every configuration with total <= max_total on n vertices, by recursion.
void for_each_config(int n, int max_total, const std::function<void(const Configuration&)>& fn) {
  Configuration c(n);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == n) {
      fn(c);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[v] = k;
      rec(v + 1, left - k);
    }
    c[v] = 0;
  };
  rec(0, max_total);
}

}  // namespace

TEST_CASE("is_solvable on the documented examples") {
  const Graph p2 = f::path(2);
  const auto c = config({0, 2});
  const auto r = is_solvable(p2, c, 0);
  check_witness(p2, c, 0, r);
  CHECK(r.witness->size() == 1);
  CHECK((*r.witness)[0] == Move{1, 0});

  const auto trivial = is_solvable(f::petersen(), config({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}), 2);
  CHECK(trivial.solvable);
  CHECK(trivial.witness->empty());

  const auto outer = config({1, 1, 1, 1, 1, 0, 0, 0, 0, 0});
  for (Vertex r5 = 5; r5 < 10; ++r5) {
    const auto res = is_solvable(f::petersen(), outer, r5);
    CHECK_FALSE(res.solvable);
    CHECK_FALSE(res.witness.has_value());
  }

  const Graph c5 = f::cycle(5);
  const auto chain = config({0, 0, 3, 2, 0});
  check_witness(c5, chain, 0, is_solvable(c5, chain, 0));
}

TEST_CASE("is_solvable argument errors") {
  const Graph p3 = f::path(3);
  CHECK_THROWS_AS(is_solvable(p3, config({0, 0, 4}), 3), ArgumentError);
  CHECK_THROWS_AS(is_solvable(p3, config({0, 4}), 0), ArgumentError);
  const Graph split = new_graph(2, {});
  CHECK_THROWS_AS(is_solvable(split, config({0, 4}), 0), DisconnectedGraphError);
}

TEST_CASE("apply_moves rejects illegal moves") {
  const Graph p3 = f::path(3);
  const Move non_edge[] = {{2, 0}};
  CHECK_THROWS_AS(apply_moves(p3, config({0, 0, 4}), non_edge), ArgumentError);
  const Move too_few[] = {{2, 1}, {2, 1}, {2, 1}};
  CHECK_THROWS_AS(apply_moves(p3, config({0, 0, 4}), too_few), ArgumentError);
  const Move ok[] = {{2, 1}, {2, 1}, {1, 0}};
  CHECK(apply_moves(p3, config({0, 0, 4}), ok) == config({1, 0, 0}));
}

TEST_CASE("pi_rooted and pi_graph on small graphs") {
  CHECK(pi_rooted(f::path(3), 0).value == 4);
  CHECK(pi_rooted(f::path(3), 1).value == 3);
  CHECK(pi_rooted(f::path(1), 0).value == 1);
  for (Vertex r = 0; r < 3; ++r) CHECK(pi_rooted(f::complete(3), r).value == 3);
  for (Vertex r = 0; r < 5; ++r) CHECK(pi_rooted(f::cycle(5), r).value == 5);

  const auto p4 = pi_graph(f::path(4));
  CHECK(p4.value == 8);
  CHECK((p4.root == 0 || p4.root == 3));
  CHECK(pi_graph(f::complete(5)).value == 5);
  CHECK(pi_graph(f::star(3)).value == 5);
}

TEST_CASE("pi_rooted critical configuration is tight") {
  for (const auto& [name, g] : testing::small_catalog()) {
    CAPTURE(name);
    for (Vertex r = 0; r < g.order(); ++r) {
      const auto res = pi_rooted(g, r);
      CHECK(res.root == r);
      CHECK(res.critical_config.total() == res.value - 1);
      CHECK(res.critical_config[r] == 0);
      CHECK_FALSE(is_solvable(g, res.critical_config, r).solvable);
    }
  }
}

TEST_CASE("pi_rooted errors") {
  CHECK_THROWS_AS(pi_rooted(new_graph(3, {}), 0), DisconnectedGraphError);
  CHECK_THROWS_AS(pi_rooted(f::path(3), 5), ArgumentError);
  SolverOptions tiny;
  tiny.max_configs = 3;
  tiny.enumeration = Enumeration::kLevelScan;
  try {
    pi_rooted(f::cycle(6), 0, tiny);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.cap() == 3);
    CHECK(e.needed() > 3);
    CHECK(e.last_verified_level() < e.level());
  }
}

TEST_CASE("max_unsolvable") {
  const auto k4 = max_unsolvable(f::complete(4), 2);
  CHECK(k4.size == 3);
  CHECK(k4.witness == config({1, 1, 0, 1}));
  const auto p3 = max_unsolvable(f::path(3), 0);
  CHECK(p3.size == 3);
  CHECK(p3.witness == config({0, 0, 3}));
  CHECK(max_unsolvable(f::cycle(5), 0).size == 4);
}

TEST_CASE("composition_count") {
  CHECK(composition_count(0, 1) == 1);
  CHECK(composition_count(3, 2) == 4);
  CHECK(composition_count(5, 3) == 21);
  CHECK(composition_count(4, 0) == 0);
  CHECK(composition_count(1000, 100) == UINT64_MAX);
}

TEST_CASE("property: solver agrees with unpruned brute force") {
  for (const auto& [name, g] : testing::small_catalog()) {
    if (g.order() > 5) continue;
    CAPTURE(name);
    for (Vertex r = 0; r < g.order(); ++r) {
      for_each_config(g.order(), 5, [&](const Configuration& c) {
        const auto res = is_solvable(g, c, r);
        CHECK(res.solvable == oracles::brute_force_solvable(g, c, r));
        if (res.solvable) check_witness(g, c, r, res);
      });
    }
  }
}

TEST_CASE("property: solvability is monotone under adding pebbles") {
  for (const auto& [name, g] : testing::small_catalog()) {
    if (g.order() > 8) continue;
    CAPTURE(name);
    const int budget = g.order() <= 5 ? 8 : 5;
    const Vertex r = 0;
    for_each_config(g.order(), budget - 1, [&](const Configuration& c) {
      if (!is_solvable(g, c, r).solvable) return;
      for (Vertex v = 0; v < g.order(); ++v) {
        Configuration more = c;
        ++more[v];
        CHECK(is_solvable(g, more, r).solvable);
      }
    });
  }
}

TEST_CASE("property: lower bounds n and 2^ecc") {
  for (const auto& [name, g] : testing::small_catalog()) {
    CAPTURE(name);
    CHECK(pi_graph(g).value >= g.order());
    for (Vertex r = 0; r < g.order(); ++r) {
      const int ecc = eccentricity(g, r);
      CHECK(pi_rooted(g, r).value >= (1 << ecc));
      const auto d = distances_from(g, r);
      Vertex far = r;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (*d[v] == ecc) far = v;
      }
      if (far == r) continue;
      Configuration c(g.order());
      c[far] = (1 << ecc) - 1;
      CHECK_FALSE(oracles::brute_force_solvable(g, c, r));
    }
  }
}

TEST_CASE("property: results do not depend on threads or enumeration") {
  std::vector<testing::Named> graphs = testing::small_catalog();
  graphs.push_back({"Petersen", f::petersen()});
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    SolverOptions base;
    const auto reference = pi_graph(g, base);
    for (int threads : {2, 3, 4}) {
      for (auto mode : {Enumeration::kLevelScan, Enumeration::kFrontier, Enumeration::kAuto}) {
        SolverOptions o;
        o.threads = threads;
        o.enumeration = mode;
        const auto other = pi_graph(g, o);
        CHECK(other.value == reference.value);
        CHECK(other.root == reference.root);
        if (mode == Enumeration::kAuto) CHECK(other.critical_config == reference.critical_config);
      }
    }
  }
}
