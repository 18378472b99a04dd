#include "pebbling/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "pebbling/error.hpp"

namespace pebbling {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") is a self-loop");
    }
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph new_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw ArgumentError(std::string(what) + " " + std::to_string(v) +
                        " is not a vertex of a graph on " +
                        std::to_string(g.order()) + " vertices");
  }
}

std::vector<std::optional<int>> distances_from(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const int du = *dist[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (!dw) {
        dw = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, v);
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

int eccentricity(const Graph& g, Vertex v) {
  int ecc = 0;
  for (const auto& d : distances_from(g, v)) {
    if (!d) throw DisconnectedGraphError();
    ecc = std::max(ecc, *d);
  }
  return ecc;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [](const auto& d) { return d.has_value(); });
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 &&
         g.edge_count() == static_cast<std::size_t>(g.order() - 1) &&
         is_connected(g);
}

Configuration::Configuration(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw ArgumentError("pebble counts must be non-negative");
  }
}

std::int64_t Configuration::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

void require_matching(const Graph& g, const Configuration& c) {
  if (c.size() != g.order()) {
    throw ArgumentError("configuration has " + std::to_string(c.size()) +
                        " entries but the graph has " +
                        std::to_string(g.order()) + " vertices");
  }
}

}  // namespace pebbling
