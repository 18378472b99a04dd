#include "pebbling/oracles.hpp"

#include <algorithm>
#include <functional>

namespace pebbling::oracles {

bool brute_force_solvable(const Graph& g, const Configuration& c, Vertex root) {
  if (c[root] >= 1) return true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] < 2) continue;
    for (Vertex u : g.neighbors(v)) {
      Configuration next = c;
      next[v] -= 2;
      next[u] += 1;
      if (brute_force_solvable(g, next, root)) return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  constexpr int kInf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) d[v][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  return d;
}

std::optional<int> girth(const Graph& g) {
  // A shortest cycle through edge (u, v) is 1 + dist(u, v) in G - uv.
  std::optional<int> best;
  for (const auto& [u, v] : g.edges()) {
    std::vector<Edge> rest;
    for (const auto& e : g.edges()) {
      if (e != Edge{u, v}) rest.push_back(e);
    }
    const auto d = all_pairs_distances(Graph(g.order(), rest));
    const int duv = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (duv >= 0 && (!best || duv + 1 < *best)) best = duv + 1;
  }
  return best;
}

namespace {

/// Solves the square system a x = b by Gauss-Jordan elimination; nullopt when
/// singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::optional<Rational> enumerate_basic_points(const LinearProgram& lp) {
  const int n = lp.num_vars();
  // Rows of the full system A x <= b including -x_j <= 0.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints()) {
    rows.push_back(c.row);
    rhs.push_back(c.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    row[static_cast<std::size_t>(j)] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  if (n == 0) return Rational(0);

  std::optional<Rational> best;
  const auto total = rows.size();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (auto i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      const auto x = solve_square(std::move(a), std::move(b));
      if (!x) return;
      for (std::size_t i = 0; i < total; ++i) {
        Rational lhs = 0;
        for (int j = 0; j < n; ++j) lhs += rows[i][static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
        if (lhs > rhs[i]) return;
      }
      Rational value = 0;
      for (int j = 0; j < n; ++j) value += lp.objective()[static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
      if (!best || value > *best) best = value;
      return;
    }
    for (std::size_t i = from; i < total; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best;
}

}  // namespace pebbling::oracles
