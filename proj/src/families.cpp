#include "pebbling/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "pebbling/error.hpp"

namespace pebbling::families {

namespace {

void require_at_least(int value, int minimum, const char* family) {
  if (value < minimum) {
    throw GraphError(std::string(family) + " requires size >= " +
                     std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

}  // namespace

Graph path(int n) {
  require_at_least(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require_at_least(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require_at_least(n, 1, "complete");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph hypercube(int d) {
  require_at_least(d, 1, "hypercube");
  if (d > 20) throw GraphError("hypercube dimension capped at 20");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int bit = 0; bit < d; ++bit) {
      const int v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, edges);
}

std::vector<std::vector<int>> bruhat_labels(int n) {
  if (n < 2 || n > 6) {
    throw GraphError("bruhat requires 2 <= n <= 6, got " + std::to_string(n));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> labels;
  do {
    labels.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return labels;
}

Graph bruhat(int n) {
  const auto labels = bruhat_labels(n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<int>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int pos = 0; pos + 1 < n; ++pos) {
      auto swapped = labels[i];
      std::swap(swapped[static_cast<std::size_t>(pos)],
                swapped[static_cast<std::size_t>(pos + 1)]);
      const int j = index.at(swapped);
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(labels.size()), edges);
}

Graph tree_from_parents(std::span<const int> parents) {
  const int n = static_cast<int>(parents.size());
  if (n == 0) throw GraphError("parent array is empty");
  int roots = 0;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const int p = parents[static_cast<std::size_t>(v)];
    if (p == kNoParent) {
      ++roots;
      continue;
    }
    if (p < 0 || p >= n || p == v) {
      throw GraphError("vertex " + std::to_string(v) + " has invalid parent " +
                       std::to_string(p));
    }
    edges.emplace_back(p, v);
  }
  if (roots != 1) {
    throw GraphError("parent array must have exactly one root, found " +
                     std::to_string(roots));
  }
  // Every vertex must reach the root by following parents.
  for (int v = 0; v < n; ++v) {
    int cur = v;
    for (int steps = 0; parents[static_cast<std::size_t>(cur)] != kNoParent;
         ++steps) {
      if (steps >= n) {
        throw GraphError("parent pointers contain a cycle through vertex " +
                         std::to_string(v));
      }
      cur = parents[static_cast<std::size_t>(cur)];
    }
  }
  return Graph(n, edges);
}

Graph star(int leaves) {
  require_at_least(leaves, 0, "star");
  std::vector<int> parents(static_cast<std::size_t>(leaves + 1), 0);
  parents[0] = kNoParent;
  return tree_from_parents(parents);
}

std::span<const std::string_view> kind_names() {
  static constexpr std::array<std::string_view, 7> kNames = {
      "path", "cycle", "complete", "hypercube", "petersen", "bruhat", "tree"};
  return kNames;
}

Graph make(const FamilySpec& spec) {
  if (spec.kind == "path") return path(spec.size);
  if (spec.kind == "cycle") return cycle(spec.size);
  if (spec.kind == "complete") return complete(spec.size);
  if (spec.kind == "hypercube") return hypercube(spec.size);
  if (spec.kind == "petersen") return petersen();
  if (spec.kind == "bruhat") return bruhat(spec.size);
  if (spec.kind == "tree") return tree_from_parents(spec.parents);
  throw ArgumentError("unknown family kind '" + spec.kind + "'");
}

std::string describe(const FamilySpec& spec) {
  if (spec.kind == "petersen") return "petersen";
  if (spec.kind == "tree") {
    std::string out = "tree(";
    for (std::size_t i = 0; i < spec.parents.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(spec.parents[i]);
    }
    return out + ")";
  }
  return spec.kind + "(" + std::to_string(spec.size) + ")";
}

}  // namespace pebbling::families
