#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pebbling/graph.hpp"
#include "pebbling/strategy.hpp"

namespace pebbling {

using Rational = mpq_class;

/// Exact "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// floor(q) for q >= 0 as a 64-bit integer.
std::int64_t floor_to_int(const Rational& q);

/// maximize objective . x  subject to  row . x <= rhs for every constraint,
/// x >= 0. Every rhs must be non-negative so the origin is feasible.
class LinearProgram {
 public:
  struct Constraint {
    std::vector<Rational> row;
    Rational rhs;
  };

  LinearProgram(int num_vars, std::vector<Rational> objective);

  void add_constraint(std::vector<Rational> row, Rational rhs);

  int num_vars() const { return num_vars_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  int num_vars_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

enum class LpStatus { kOptimal, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Rational value;
  std::vector<Rational> point;
  /// One multiplier per constraint; with `point` it certifies optimality.
  std::vector<Rational> dual;
  std::int64_t pivot_count = 0;
};

/// Dense dictionary simplex over exact rationals with Bland's rule.
/// When `trace` is non-null the dictionary is dumped after every pivot.
LpSolution solve_max(const LinearProgram& lp, std::ostream* trace = nullptr);

/// Variables are the non-root vertices in ascending order; one constraint
/// per strategy: sum_v w_i(v) x_v <= unit_weight(S_i).
LinearProgram build_relaxation(const Graph& g, Vertex root, const StrategySet& set);

/// Vertex behind each variable of build_relaxation(g, root, ...).
std::vector<Vertex> relaxation_vertices(const Graph& g, Vertex root);

}  // namespace pebbling
