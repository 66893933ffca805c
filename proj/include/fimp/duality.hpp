#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fimp/certify.hpp"
#include "fimp/pareto.hpp"

namespace fimp {

/// Candidate point (y, λL, λU, μ) of the Mond–Weir dual.
struct DualPoint {
  Point y;
  Vec lamL, lamU, mu;
  friend bool operator==(const DualPoint&, const DualPoint&) = default;
};

/// L(y, λL, λU, μ) = F(y).
IntervalVector dual_objective(const FimpProblem& prob, const DualPoint& d);

struct DualFeasibility {
  bool y_in_S = false;
  bool nonnegative = false;
  bool normalized = false;
  bool lambda_nonzero = false;
  bool mu_h_nonnegative = false;
  bool stationarity = false;
  std::optional<Certificate> witness;  // subgradients and ω for the given multipliers
  std::string note;                    // e.g. an unsupported kink

  bool feasible() const {
    return y_in_S && nonnegative && normalized && lambda_nonzero && mu_h_nonnegative && stationarity;
  }
};

/// Checks every membership condition separately. The stationarity LP runs in
/// the subgradient weights and normal-cone coefficients only.
DualFeasibility dual_feasible(const FimpProblem& prob, const DualPoint& d);

enum class DualityRelation { Weak, Strong, Converse };
enum class FindingStatus { Verified, Violated };
std::string to_string(DualityRelation r);
std::string to_string(FindingStatus s);

struct DualityFinding {
  DualityRelation relation = DualityRelation::Weak;
  FindingStatus status = FindingStatus::Verified;
  std::optional<Point> primal;
  std::optional<DualPoint> dual;
  std::optional<ConvexityReport> convexity;
  std::size_t pairs_checked = 0;
  std::string note;
};

/// One finding per dual point. Generalized mode forbids F(x) ≺ˢ_LU L(d);
/// strict mode forbids F(x) ⪯_LU L(d). A violation is paired with a
/// convexity report at d.y showing the convexity hypothesis fails there.
/// Throws InfeasibleCandidate / Error when inputs are not (dual) feasible.
std::vector<DualityFinding> weak_duality_scan(const FimpProblem& prob, const std::vector<Point>& primal,
                                              const std::vector<DualPoint>& duals, ConvexityMode mode,
                                              std::size_t jobs = 1);

struct StrongDualityResult {
  bool cq_holds = false;
  std::optional<Certificate> kkt;
  std::optional<DualPoint> dual;
  bool dual_feasible = false;
  bool values_equal = false;
  std::string note;
};

/// KKT search at xbar; on success the dual point (xbar, λ, μ) with checks.
StrongDualityResult strong_duality_construct(const FimpProblem& prob, const Point& xbar);

struct ConverseResult {
  DualityFinding finding;
  bool slackness_holds = false;  // μ_j h_j(y) = 0 for all j
  bool membership = false;       // y grid-certified in S2w (generalized) or S1 (strict)
  std::optional<ParetoVerdict> verdict;
};

/// Throws DualPointNotPrimalFeasible when y is outside Ω.
ConverseResult converse_duality_check(const FimpProblem& prob, const DualPoint& d, const std::vector<Point>& grid,
                                      ConvexityMode mode);

/// Mond–Weir multipliers at y from the stationarity LP with Σ μ_j h_j(y) >= 0.
std::optional<DualPoint> mw_search(const FimpProblem& prob, const Point& y);

}  // namespace fimp
