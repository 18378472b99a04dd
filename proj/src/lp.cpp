#include "pebbling/lp.hpp"

#include <ostream>
#include <stdexcept>

#include "pebbling/error.hpp"

namespace pebbling {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw ParseError("'" + text + "' is not a rational number");
  }
  q.canonicalize();
  return q;
}

std::int64_t floor_to_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw OverflowError("rational floor exceeds 64-bit range");
  return f.get_si();
}

LinearProgram::LinearProgram(int num_vars, std::vector<Rational> objective)
    : num_vars_(num_vars), objective_(std::move(objective)) {
  if (num_vars < 0 || static_cast<int>(objective_.size()) != num_vars) {
    throw ArgumentError("objective has " + std::to_string(objective_.size()) +
                        " coefficients for " + std::to_string(num_vars) +
                        " variables");
  }
  for (auto& c : objective_) c.canonicalize();
}

void LinearProgram::add_constraint(std::vector<Rational> row, Rational rhs) {
  if (static_cast<int>(row.size()) != num_vars_) {
    throw ArgumentError("constraint row has " + std::to_string(row.size()) +
                        " entries for " + std::to_string(num_vars_) +
                        " variables");
  }
  for (auto& a : row) a.canonicalize();
  rhs.canonicalize();
  if (rhs < 0) throw ArgumentError("constraint rhs must be non-negative");
  constraints_.push_back({std::move(row), std::move(rhs)});
}

namespace {

/// Dictionary form: basic_[i] = rhs_[i] - sum_j coef_[i][j] * nonbasic_[j],
/// z = z0_ + sum_j cost_[j] * nonbasic_[j]. Variables 0..n-1 are the
/// originals, n..n+m-1 the slacks.
class Dictionary {
 public:
  explicit Dictionary(const LinearProgram& lp)
      : n_(lp.num_vars()), m_(static_cast<int>(lp.constraints().size())) {
    for (int j = 0; j < n_; ++j) nonbasic_.push_back(j);
    cost_ = lp.objective();
    for (int i = 0; i < m_; ++i) {
      const auto& c = lp.constraints()[static_cast<std::size_t>(i)];
      basic_.push_back(n_ + i);
      rhs_.push_back(c.rhs);
      coef_.push_back(c.row);
    }
  }

  /// Returns false when the LP is unbounded.
  bool optimize(std::int64_t& pivots, std::ostream* trace) {
    if (trace) dump(*trace, pivots);
    while (true) {
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (sgn(cost_[at(j)]) > 0 &&
            (enter < 0 || nonbasic_[at(j)] < nonbasic_[at(enter)])) {
          enter = j;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = coef_[at(i)][at(enter)];
        if (sgn(a) <= 0) continue;
        Rational ratio = rhs_[at(i)] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[at(i)] < basic_[at(leave)])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
      if (trace) dump(*trace, pivots);
    }
  }

  LpSolution solution() const {
    LpSolution sol;
    sol.value = z0_;
    sol.point.assign(static_cast<std::size_t>(n_), Rational(0));
    sol.dual.assign(static_cast<std::size_t>(m_), Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basic_[at(i)] < n_) sol.point[at(basic_[at(i)])] = rhs_[at(i)];
    }
    for (int j = 0; j < n_; ++j) {
      if (nonbasic_[at(j)] >= n_) sol.dual[at(nonbasic_[at(j)] - n_)] = -cost_[at(j)];
    }
    return sol;
  }

 private:
  static std::size_t at(int i) { return static_cast<std::size_t>(i); }

  void pivot(int r, int s) {
    const Rational inv = 1 / coef_[at(r)][at(s)];
    auto& row = coef_[at(r)];
    rhs_[at(r)] *= inv;
    for (int j = 0; j < n_; ++j) {
      if (j != s) row[at(j)] *= inv;
    }
    row[at(s)] = inv;

    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Rational factor = coef_[at(i)][at(s)];
      if (sgn(factor) == 0) continue;
      auto& other = coef_[at(i)];
      rhs_[at(i)] -= factor * rhs_[at(r)];
      for (int j = 0; j < n_; ++j) {
        if (j != s) other[at(j)] -= factor * row[at(j)];
      }
      other[at(s)] = -factor * inv;
    }

    const Rational c = cost_[at(s)];
    z0_ += c * rhs_[at(r)];
    for (int j = 0; j < n_; ++j) {
      if (j != s) cost_[at(j)] -= c * row[at(j)];
    }
    cost_[at(s)] = -c * inv;

    std::swap(basic_[at(r)], nonbasic_[at(s)]);
  }

  std::string name(int var) const {
    return var < n_ ? "x" + std::to_string(var) : "s" + std::to_string(var - n_);
  }

  void dump(std::ostream& os, std::int64_t pivots) const {
    os << "-- dictionary after " << pivots << " pivots\n";
    for (int i = 0; i < m_; ++i) {
      os << name(basic_[at(i)]) << " = " << to_string(rhs_[at(i)]);
      for (int j = 0; j < n_; ++j) {
        const Rational& a = coef_[at(i)][at(j)];
        if (sgn(a) != 0) os << " - (" << to_string(a) << ")" << name(nonbasic_[at(j)]);
      }
      os << '\n';
    }
    os << "z = " << to_string(z0_);
    for (int j = 0; j < n_; ++j) {
      if (sgn(cost_[at(j)]) != 0) {
        os << " + (" << to_string(cost_[at(j)]) << ")" << name(nonbasic_[at(j)]);
      }
    }
    os << '\n';
  }

  int n_;
  int m_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> cost_;
  Rational z0_ = 0;
};

}  // namespace

LpSolution solve_max(const LinearProgram& lp, std::ostream* trace) {
  Dictionary dict(lp);
  std::int64_t pivots = 0;
  const bool bounded = dict.optimize(pivots, trace);
  LpSolution sol;
  if (bounded) {
    sol = dict.solution();
    sol.status = LpStatus::kOptimal;
  } else {
    sol.status = LpStatus::kUnbounded;
  }
  sol.pivot_count = pivots;
  return sol;
}

std::vector<Vertex> relaxation_vertices(const Graph& g, Vertex root) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != root) out.push_back(v);
  }
  return out;
}

LinearProgram build_relaxation(const Graph& g, Vertex root, const StrategySet& set) {
  require_vertex(g, root, "root");
  if (set.root() != root) {
    throw ArgumentError("strategy set is rooted at " + std::to_string(set.root()) +
                        ", not " + std::to_string(root));
  }
  const auto vars = relaxation_vertices(g, root);
  const int n = static_cast<int>(vars.size());
  LinearProgram lp(n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
  for (const auto& s : set.strategies()) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(j)] = Rational(
          static_cast<long>(s.weight_of(vars[static_cast<std::size_t>(j)])));
    }
    lp.add_constraint(std::move(row), Rational(static_cast<long>(unit_weight(s))));
  }
  return lp;
}

}  // namespace pebbling
