#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fimp/problem.hpp"

namespace fimp {

/// Membership of a target in the four solution sets relative to a finite
/// candidate set ("grid-certified"). Each false flag carries a dominator.
struct ParetoVerdict {
  Point point;
  IntervalVector value{Interval()};
  bool s1 = true;   // no candidate with F(x) ⪯ F(target)
  bool s2 = true;   // no candidate with F(x) <=_LU all, <ˢ_LU somewhere
  bool s1w = true;  // no candidate with F(x) <_LU in every component
  bool s2w = true;  // no candidate with F(x) ≺ˢ_LU F(target)
  std::optional<Point> dom_s1, dom_s2, dom_s1w, dom_s2w;

  bool inclusions_hold() const {
    return (!s1 || s2) && (!s2 || s2w) && (!s1 || s1w) && (!s1w || s2w);
  }
};

/// Throws TargetNotInCandidates, InfeasibleCandidate, AssumptionViolated.
ParetoVerdict classify(const FimpProblem& prob, const std::vector<Point>& candidates, const Point& target);

/// Classification of precomputed values; index `target` into `values`.
ParetoVerdict classify_values(const std::vector<Point>& points, const std::vector<IntervalVector>& values,
                              std::size_t target);

struct ExcludedPoint {
  Point point;
  std::string reason;
};

struct GridScan {
  std::vector<ParetoVerdict> verdicts;  // sorted by point
  std::vector<ExcludedPoint> excluded;  // feasible points failing a standing assumption
  std::size_t grid_points = 0;
  std::size_t infeasible_points = 0;
};

/// Classifies every feasible grid point against all feasible grid points.
/// Throws EmptyFeasibleGrid.
GridScan scan_grid(const FimpProblem& prob, const GridSpec& grid, std::size_t jobs = 1);

/// Feasible grid points satisfying the standing assumptions, with their values.
struct FeasibleGrid {
  std::vector<Point> points;
  std::vector<IntervalVector> values;
  std::vector<ExcludedPoint> excluded;
  std::size_t infeasible_points = 0;
};
FeasibleGrid feasible_grid(const FimpProblem& prob, const GridSpec& grid);

}  // namespace fimp
