#include "doctest.h"

#include <algorithm>
#include <set>

#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/treepi.hpp"
#include "pebbling/verify.hpp"

using namespace pebbling;
namespace f = pebbling::families;

namespace {

std::multiset<int> lengths_of(const PathPartition& p) {
  return {p.lengths.begin(), p.lengths.end()};
}

Graph binary7() {
  const int parents[] = {f::kNoParent, 0, 0, 1, 1, 2, 2};
  return f::tree_from_parents(parents);
}

}  // namespace

TEST_CASE("max_path_partition examples") {
  const auto p5 = max_path_partition(f::path(5), 0);
  REQUIRE(p5.paths.size() == 1);
  CHECK(p5.paths[0] == std::vector<Vertex>{4, 3, 2, 1, 0});
  CHECK(p5.lengths == std::vector<int>{4});

  CHECK(lengths_of(max_path_partition(f::star(3), 0)) == std::multiset<int>{1, 1, 1});
  CHECK(lengths_of(max_path_partition(f::star(3), 1)) == std::multiset<int>{2, 1});

  const auto t = max_path_partition(binary7(), 0);
  CHECK(lengths_of(t) == std::multiset<int>{2, 2, 1, 1});
  CHECK(t.paths == std::vector<std::vector<Vertex>>{{3, 1, 0}, {4, 1}, {5, 2, 0}, {6, 2}});

  CHECK(max_path_partition(f::path(1), 0).paths.empty());
  CHECK_THROWS_AS(max_path_partition(f::cycle(4), 0), GraphError);
  CHECK_THROWS_AS(max_path_partition(f::path(3), 3), ArgumentError);
}

TEST_CASE("pi_tree examples") {
  for (int n = 1; n <= 8; ++n) CHECK(pi_tree(f::path(n), 0) == (std::int64_t{1} << (n - 1)));
  CHECK(pi_tree(f::star(3), 0) == 4);
  CHECK(pi_tree(f::star(3), 1) == 5);
  CHECK(pi_rooted(f::star(3), 1).value == 5);
  CHECK(pi_tree(binary7(), 0) == 9);
  CHECK(pi_rooted(binary7(), 0).value == 9);
  CHECK_THROWS_AS(pi_tree(f::cycle(5), 0), GraphError);
}

TEST_CASE("pi_tree_all examples") {
  const auto p4 = pi_tree_all(f::path(4));
  CHECK(p4.value == 8);
  CHECK(p4.root == 0);
  const auto star = pi_tree_all(f::star(3));
  CHECK(star.value == 5);
  CHECK(star.root == 1);
  CHECK(pi_tree_all(f::complete(1)).value == 1);
}

TEST_CASE("partition witness for a leaf root of K1,3") {
  const auto w = partition_witness(f::star(3), max_path_partition(f::star(3), 1));
  CHECK(w.total() == 4);
  CHECK(w.counts() == std::vector<int>{0, 0, 3, 1});
  CHECK_FALSE(is_solvable(f::star(3), w, 1).solvable);
}

TEST_CASE("recursive parent arrays count (n-1)! shapes") {
  int factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    if (n > 1) factorial *= n - 1;
    CHECK(verify::recursive_parent_arrays(n).size() == static_cast<std::size_t>(factorial));
  }
}

TEST_CASE("property: partitions tile the edge set of every tree up to 8 vertices") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& parents : verify::recursive_parent_arrays(n)) {
      const Graph t = f::tree_from_parents(parents);
      for (Vertex r = 0; r < n; ++r) {
        const auto p = max_path_partition(t, r);
        std::set<Edge> seen;
        bool disjoint = true;
        for (std::size_t i = 0; i < p.paths.size(); ++i) {
          const auto& path = p.paths[i];
          CHECK(static_cast<int>(path.size()) == p.lengths[i] + 1);
          for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            const Edge e = std::minmax(path[j], path[j + 1]);
            CHECK(t.has_edge(e.first, e.second));
            disjoint = seen.insert(e).second && disjoint;
          }
        }
        CHECK(disjoint);
        CHECK(seen.size() == t.edge_count());
      }
    }
  }
}

TEST_CASE("property: formula equals exhaustive pi with an unsolvable witness") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& parents : verify::recursive_parent_arrays(n)) {
      const Graph t = f::tree_from_parents(parents);
      for (Vertex r = 0; r < n; ++r) {
        const auto value = pi_tree(t, r);
        CHECK(value == pi_rooted(t, r).value);
        const auto w = partition_witness(t, max_path_partition(t, r));
        CHECK(w.total() == value - 1);
        CHECK_FALSE(is_solvable(t, w, r).solvable);
      }
    }
  }
}
