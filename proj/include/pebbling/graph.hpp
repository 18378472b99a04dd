#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pebbling {

/// Vertices are dense ids 0..n-1.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph.
///
/// Construction rejects self-loops and out-of-range endpoints and collapses
/// duplicate edges, so adjacency lists are sorted, duplicate-free and
/// symmetric. Disconnected graphs are allowed here; the solver and bound
/// routines check connectivity themselves.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

Graph new_graph(int n, std::span<const Edge> edges);

/// Throws ArgumentError when `v` is not a vertex of `g`.
void require_vertex(const Graph& g, Vertex v, const char* what = "vertex");

/// BFS distances from `source`; unreachable vertices get std::nullopt.
std::vector<std::optional<int>> distances_from(const Graph& g, Vertex source);

/// Shortest-path length, or std::nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Max distance from v. Throws DisconnectedGraphError for disconnected g.
int eccentricity(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// Throws DisconnectedGraphError unless g is connected.
void require_connected(const Graph& g);

/// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

/// Pebble counts per vertex.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int n) : counts_(static_cast<std::size_t>(n), 0) {}
  explicit Configuration(std::vector<int> counts);

  int size() const { return static_cast<int>(counts_.size()); }
  int operator[](Vertex v) const { return counts_[static_cast<std::size_t>(v)]; }
  int& operator[](Vertex v) { return counts_[static_cast<std::size_t>(v)]; }
  std::int64_t total() const;
  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<int> counts_;
};

/// Throws ArgumentError unless c has one entry per vertex of g.
void require_matching(const Graph& g, const Configuration& c);

}  // namespace pebbling
