#include "pebbling/treepi.hpp"

#include <algorithm>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw GraphError("input is not a tree");
}

}  // namespace

PathPartition max_path_partition(const Graph& tree, Vertex root) {
  require_tree(tree);
  require_vertex(tree, root, "root");
  const auto n = static_cast<std::size_t>(tree.order());

  // Parents and a root-first order from an iterative DFS.
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex u : tree.neighbors(v)) {
      if (u != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(u)] = v;
        stack.push_back(u);
      }
    }
  }

  std::vector<int> height(n, 0);
  std::vector<Vertex> preferred(n, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex c : tree.neighbors(v)) {
      if (c == parent[static_cast<std::size_t>(v)]) continue;
      const int h = height[static_cast<std::size_t>(c)] + 1;
      auto& pref = preferred[static_cast<std::size_t>(v)];
      if (pref < 0 || h > height[static_cast<std::size_t>(v)] ||
          (h == height[static_cast<std::size_t>(v)] && c < pref)) {
        pref = c;
        height[static_cast<std::size_t>(v)] = h;
      }
    }
  }

  PathPartition out;
  for (Vertex leaf = 0; leaf < tree.order(); ++leaf) {
    if (leaf == root || preferred[static_cast<std::size_t>(leaf)] >= 0) continue;
    std::vector<Vertex> path{leaf};
    Vertex cur = leaf;
    while (true) {
      const Vertex p = parent[static_cast<std::size_t>(cur)];
      path.push_back(p);
      if (p == root || preferred[static_cast<std::size_t>(p)] != cur) break;
      cur = p;
    }
    out.lengths.push_back(static_cast<int>(path.size()) - 1);
    out.paths.push_back(std::move(path));
  }
  return out;
}

std::int64_t pi_tree(const Graph& tree, Vertex root) {
  const auto partition = max_path_partition(tree, root);
  std::int64_t total = 1;
  for (int e : partition.lengths) {
    if (e >= 62) throw OverflowError("path too long for 64-bit pebbling number");
    total += (std::int64_t{1} << e) - 1;
  }
  return total;
}

TreePi pi_tree_all(const Graph& tree) {
  require_tree(tree);
  TreePi best{0, 0};
  for (Vertex r = 0; r < tree.order(); ++r) {
    const auto value = pi_tree(tree, r);
    if (value > best.value) best = {value, r};
  }
  return best;
}

Configuration partition_witness(const Graph& tree, const PathPartition& partition) {
  Configuration c(tree.order());
  for (std::size_t i = 0; i < partition.paths.size(); ++i) {
    const int e = partition.lengths[i];
    c[partition.paths[i].front()] += (1 << e) - 1;
  }
  return c;
}

}  // namespace pebbling
