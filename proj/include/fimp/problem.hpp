#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fimp/expr.hpp"
#include "fimp/geometry.hpp"
#include "fimp/interval.hpp"

namespace fimp {

/// Rational grid: per axis, lo + k (hi - lo) / steps for k = 0..steps.
struct GridSpec {
  Vec lo;
  Vec hi;
  std::vector<unsigned> steps;

  std::size_t dimension() const { return lo.size(); }
  /// Throws MalformedProblem on inconsistent lengths, steps = 0 or lo > hi.
  void validate() const;
  std::size_t size() const;
  /// All grid points in lexicographic order.
  std::vector<Point> points() const;
  /// The 2^n corners.
  std::vector<Point> corners() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Minimise F(x) = (f_1/g_1, ..., f_m/g_m) over Ω = {x ∈ S : h(x) <= 0}, where
/// f_i = [fL_i, fU_i] and g_i = [gL_i, gU_i] are interval-valued.
struct FimpProblem {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::vector<Expr> fL, fU, gL, gU;
  std::vector<Expr> h;
  Polyhedron S;
  std::optional<GridSpec> grid;

  /// Lengths and variable indices. Throws MalformedProblem.
  void validate_shape() const;

  friend bool operator==(const FimpProblem&, const FimpProblem&) = default;
};

/// Throws AssumptionViolated naming the first failed condition among
/// fL >= 0, fL <= fU, 0 < gL <= gU.
void check_assumptions(const FimpProblem& prob, const Point& x);

/// F_i(x) = [fL_i / gU_i, fU_i / gL_i]. Checks the standing assumptions first.
IntervalVector objective(const FimpProblem& prob, const Point& x);

/// x ∈ S and h_j(x) <= 0 for all j.
bool is_feasible(const FimpProblem& prob, const Point& x);

/// Indices j with h_j(x) = 0.
std::vector<std::size_t> active_constraints(const FimpProblem& prob, const Point& x);

}  // namespace fimp
