#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fimp/rational.hpp"

namespace fimp {

/// Linear feasibility system over exact rationals:
///   E x = e,  G x <= g,  x_j >= 0 for flagged j (others free).
struct LpProblem {
  struct Row {
    Vec coeffs;
    Rational rhs;
  };

  std::size_t num_vars = 0;
  std::vector<bool> nonneg;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;  // coeffs . x <= rhs

  LpProblem() = default;
  explicit LpProblem(std::size_t vars, bool nonnegative = true)
      : num_vars(vars), nonneg(vars, nonnegative) {}

  /// Appends a variable and returns its index.
  std::size_t add_var(bool nonnegative);

  void add_eq(Vec coeffs, Rational rhs);
  void add_le(Vec coeffs, Rational rhs);
  void add_ge(Vec coeffs, Rational rhs);

  /// Zero row of the current width.
  Vec row() const { return zeros(num_vars); }

  /// Throws MalformedProblem on inconsistent widths.
  void validate() const;
};

/// Farkas alternative: y (free, one per equality) and z >= 0 (one per
/// inequality) with (E^T y + G^T z)_j >= 0 for nonnegative j, = 0 for free j,
/// and e.y + g.z < 0.
struct FarkasWitness {
  Vec eq_multipliers;
  Vec le_multipliers;
};

struct LpOutcome {
  bool feasible = false;
  Vec point;             // set when feasible
  FarkasWitness farkas;  // set when infeasible
  std::size_t pivots = 0;
};

/// Exact two-phase simplex (phase one only) with Bland's rule. Every answer is
/// re-verified before it is returned; a failed self-check throws Error.
LpOutcome lp_feasible(const LpProblem& problem);

bool satisfies(const LpProblem& problem, const Vec& point);
bool verify_farkas(const LpProblem& problem, const FarkasWitness& witness);

}  // namespace fimp
