#include "fimp/pareto.hpp"

#include <algorithm>

#include "fimp/error.hpp"
#include "fimp/parallel.hpp"

namespace fimp {

ParetoVerdict classify_values(const std::vector<Point>& points, const std::vector<IntervalVector>& values,
                              std::size_t target) {
  ParetoVerdict v;
  v.point = points[target];
  v.value = values[target];
  const IntervalVector& ft = values[target];
  for (std::size_t k = 0; k < points.size(); ++k) {
    const IntervalVector& fx = values[k];
    if (v.s1 && vec_preceq_lu(fx, ft)) {
      v.s1 = false;
      v.dom_s1 = points[k];
    }
    if (v.s2 && vec_preceq_lu_strict_somewhere(fx, ft)) {
      v.s2 = false;
      v.dom_s2 = points[k];
    }
    if (v.s1w && vec_all_lt_lu(fx, ft)) {
      v.s1w = false;
      v.dom_s1w = points[k];
    }
    if (v.s2w && vec_prec_lu_strict(fx, ft)) {
      v.s2w = false;
      v.dom_s2w = points[k];
    }
    if (!v.s1 && !v.s2 && !v.s1w && !v.s2w) break;
  }
  return v;
}

ParetoVerdict classify(const FimpProblem& prob, const std::vector<Point>& candidates, const Point& target) {
  auto it = std::find(candidates.begin(), candidates.end(), target);
  if (it == candidates.end()) throw TargetNotInCandidates("target " + to_string(target) + " is not a candidate");
  std::vector<IntervalVector> values;
  values.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (!is_feasible(prob, c)) throw InfeasibleCandidate("candidate " + to_string(c) + " is not feasible");
    values.push_back(objective(prob, c));
  }
  return classify_values(candidates, values, static_cast<std::size_t>(it - candidates.begin()));
}

FeasibleGrid feasible_grid(const FimpProblem& prob, const GridSpec& grid) {
  FeasibleGrid out;
  for (auto& x : grid.points()) {
    if (!is_feasible(prob, x)) {
      ++out.infeasible_points;
      continue;
    }
    try {
      IntervalVector f = objective(prob, x);
      out.values.push_back(std::move(f));
      out.points.push_back(std::move(x));
    } catch (const AssumptionViolated& e) {
      out.excluded.push_back({std::move(x), e.what()});
    }
  }
  return out;
}

GridScan scan_grid(const FimpProblem& prob, const GridSpec& grid, std::size_t jobs) {
  if (grid.dimension() != prob.n) throw DimensionMismatch("grid dimension differs from the problem");
  FeasibleGrid fg = feasible_grid(prob, grid);
  if (fg.points.empty()) throw EmptyFeasibleGrid("no feasible grid point satisfies the standing assumptions");
  GridScan scan;
  scan.grid_points = grid.size();
  scan.infeasible_points = fg.infeasible_points;
  scan.excluded = std::move(fg.excluded);
  scan.verdicts.resize(fg.points.size());
  parallel_for(fg.points.size(), jobs,
               [&](std::size_t i) { scan.verdicts[i] = classify_values(fg.points, fg.values, i); });
  return scan;
}

}  // namespace fimp
