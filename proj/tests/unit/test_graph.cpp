#include "doctest.h"

#include "catalog.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/io.hpp"
#include "pebbling/oracles.hpp"

using namespace pebbling;

TEST_CASE("new_graph builds adjacency and collapses duplicates") {
  const Edge one[] = {{0, 1}};
  const Graph g = new_graph(2, one);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.has_edge(1, 0));

  const Edge dup[] = {{0, 1}, {1, 2}, {0, 1}};
  const Graph h = new_graph(3, dup);
  CHECK(h.edge_count() == 2);
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Edge reversed[] = {{1, 0}, {2, 1}};
  CHECK(new_graph(3, reversed) == h);
}

TEST_CASE("new_graph rejects self-loops and bad endpoints") {
  const Edge loop[] = {{0, 0}};
  CHECK_THROWS_AS(new_graph(1, loop), GraphError);
  try {
    new_graph(1, loop);
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("(0, 0)") != std::string::npos);
  }
  const Edge out_of_range[] = {{0, 3}};
  CHECK_THROWS_AS(new_graph(3, out_of_range), GraphError);
  const Edge negative[] = {{-1, 0}};
  CHECK_THROWS_AS(new_graph(3, negative), GraphError);
  CHECK_THROWS_AS(new_graph(-1, {}), GraphError);
}

TEST_CASE("distance and eccentricity") {
  const Graph p4 = families::path(4);
  CHECK(distance(p4, 0, 3) == 3);
  CHECK(eccentricity(p4, 0) == 3);
  CHECK(eccentricity(families::cycle(5), 3) == 2);
  CHECK_THROWS_AS(distance(p4, 0, 4), ArgumentError);

  const Graph pet = families::petersen();
  const auto d = oracles::all_pairs_distances(pet);
  int diameter = 0;
  for (Vertex u = 0; u < 10; ++u) {
    CHECK(eccentricity(pet, u) == 2);
    for (Vertex v = 0; v < 10; ++v) {
      CHECK(distance(pet, u, v) == d[u][v]);
      diameter = std::max(diameter, d[u][v]);
    }
  }
  CHECK(diameter == 2);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(families::path(3)));
  CHECK_FALSE(is_connected(new_graph(2, {})));
  CHECK(is_connected(families::petersen()));
  const Graph split = new_graph(2, {});
  CHECK_FALSE(distance(split, 0, 1).has_value());
  CHECK_THROWS_AS(eccentricity(split, 0), DisconnectedGraphError);
  CHECK_THROWS_AS(require_connected(split), DisconnectedGraphError);
  CHECK(is_tree(families::path(5)));
  CHECK_FALSE(is_tree(families::cycle(5)));
}

TEST_CASE("configuration rejects negative counts and wrong sizes") {
  CHECK_THROWS_AS(Configuration(std::vector<int>{1, -1}), ArgumentError);
  const Configuration c(std::vector<int>{0, 2, 3});
  CHECK(c.total() == 5);
  CHECK_THROWS_AS(require_matching(families::path(4), c), ArgumentError);
}

TEST_CASE("property: handshake identity") {
  for (const auto& [name, g] : testing::wide_catalog()) {
    CAPTURE(name);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += static_cast<std::size_t>(g.degree(v));
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("property: distance is a metric matching Floyd-Warshall") {
  for (const auto& [name, g] : testing::wide_catalog()) {
    if (g.order() > 12) continue;
    CAPTURE(name);
    const auto d = oracles::all_pairs_distances(g);
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const int duv = *distance(g, u, v);
        CHECK(duv == d[u][v]);
        CHECK(duv == *distance(g, v, u));
        CHECK((duv == 0) == (u == v));
        for (Vertex w = 0; w < n; ++w) CHECK(duv <= d[u][w] + d[w][v]);
      }
    }
  }
}

TEST_CASE("property: edge-list round trip") {
  for (const auto& [name, g] : testing::wide_catalog()) {
    CAPTURE(name);
    const std::string text = io::write_edge_list(g);
    CHECK(io::read_edge_list(text) == g);
    CHECK(io::write_edge_list(io::read_edge_list(text)) == text);
  }
}

TEST_CASE("edge-list format is exact") {
  CHECK(io::write_edge_list(families::path(3)) == "3 2\n0 1\n1 2\n");
  CHECK(io::write_edge_list(families::complete(1)) == "1 0\n");
}

TEST_CASE("edge-list parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      io::read_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("x 1\n0 1\n") == 1);
  CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("3 1\n0 5\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 1\n0  1\n") == 2);
}
