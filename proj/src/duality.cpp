#include "fimp/duality.hpp"

#include <algorithm>

#include "fimp/error.hpp"
#include "fimp/parallel.hpp"

namespace fimp {

std::string to_string(DualityRelation r) {
  switch (r) {
    case DualityRelation::Weak: return "weak";
    case DualityRelation::Strong: return "strong";
    case DualityRelation::Converse: return "converse";
  }
  return "?";
}

std::string to_string(FindingStatus s) { return s == FindingStatus::Verified ? "verified" : "violated"; }

IntervalVector dual_objective(const FimpProblem& prob, const DualPoint& d) { return objective(prob, d.y); }

DualFeasibility dual_feasible(const FimpProblem& prob, const DualPoint& d) {
  DualFeasibility r;
  if (d.y.size() != prob.n || d.lamL.size() != prob.m || d.lamU.size() != prob.m || d.mu.size() != prob.p) {
    throw LengthMismatch("dual point vectors do not match the problem sizes");
  }
  r.y_in_S = prob.S.contains(d.y);
  Rational lam = 0, total = 0;
  r.nonnegative = true;
  for (std::size_t i = 0; i < prob.m; ++i) {
    if (d.lamL[i] < 0 || d.lamU[i] < 0) r.nonnegative = false;
    lam += d.lamL[i] + d.lamU[i];
  }
  total = lam;
  Rational mu_h = 0;
  for (std::size_t j = 0; j < prob.p; ++j) {
    if (d.mu[j] < 0) r.nonnegative = false;
    total += d.mu[j];
    mu_h += d.mu[j] * eval(prob.h[j], d.y);
  }
  r.normalized = total == 1;
  r.lambda_nonzero = lam != 0;
  r.mu_h_nonnegative = mu_h >= 0;
  if (!r.y_in_S) {
    r.note = "y is outside S";
    return r;
  }
  if (!r.nonnegative) {
    r.note = "negative multiplier";
    return r;
  }
  StationarityFamily fam = assemble_stationarity(prob, d.y, {.objectives = true, .require_feasible = false});
  Vec fixed;
  fixed.insert(fixed.end(), d.lamL.begin(), d.lamL.end());
  fixed.insert(fixed.end(), d.lamU.begin(), d.lamU.end());
  fixed.insert(fixed.end(), d.mu.begin(), d.mu.end());
  SearchResult s = stationarity_search(fam, SearchMode::Fixed, fixed);
  r.stationarity = s.certificate.has_value();
  r.witness = std::move(s.certificate);
  return r;
}

namespace {

// Convexity evidence at y against one primal point: generator tuples first,
// then the dual point's own subgradients.
ConvexityReport convexity_evidence(const FimpProblem& prob, const DualPoint& d, const Point& x, ConvexityMode mode,
                                   const std::optional<Certificate>& witness) {
  ConvexityReport rep = convexity_falsify(prob, d.y, {x}, mode);
  if (rep.falsified || !witness) return rep;
  ConvexityReport own = convexity_check_selection(prob, d.y, {x}, mode, witness->sel);
  own.tuples_tested += rep.tuples_tested;
  own.lps_solved += rep.lps_solved;
  own.inclusion_based = own.inclusion_based || rep.inclusion_based;
  return own;
}

}  // namespace

std::vector<DualityFinding> weak_duality_scan(const FimpProblem& prob, const std::vector<Point>& primal,
                                              const std::vector<DualPoint>& duals, ConvexityMode mode,
                                              std::size_t jobs) {
  std::vector<IntervalVector> fx;
  fx.reserve(primal.size());
  for (const auto& x : primal) {
    if (!is_feasible(prob, x)) throw InfeasibleCandidate("primal point " + to_string(x) + " is not feasible");
    fx.push_back(objective(prob, x));
  }
  std::vector<DualityFinding> findings(duals.size());
  parallel_for(duals.size(), jobs, [&](std::size_t k) {
    const DualPoint& d = duals[k];
    DualFeasibility feas = dual_feasible(prob, d);
    if (!feas.feasible()) throw Error("dual point at y = " + to_string(d.y) + " is not dual feasible");
    const IntervalVector L = dual_objective(prob, d);
    DualityFinding f;
    f.relation = DualityRelation::Weak;
    f.dual = d;
    for (std::size_t i = 0; i < primal.size(); ++i) {
      ++f.pairs_checked;
      const bool bad = mode == ConvexityMode::Generalized ? vec_prec_lu_strict(fx[i], L) : vec_preceq_lu(fx[i], L);
      if (!bad) continue;
      f.status = FindingStatus::Violated;
      f.primal = primal[i];
      f.convexity = convexity_evidence(prob, d, primal[i], mode, feas.witness);
      f.note = f.convexity->falsified ? "convexity hypothesis fails at y"
                                      : "no convexity counterexample found at y for this pair";
      break;
    }
    findings[k] = std::move(f);
  });
  return findings;
}

StrongDualityResult strong_duality_construct(const FimpProblem& prob, const Point& xbar) {
  StrongDualityResult r;
  r.cq_holds = cq_check(prob, xbar).holds;
  SearchResult s = kkt_search(prob, xbar);
  if (!s.certificate) {
    r.note = r.cq_holds ? "no KKT multipliers at this point" : "CQ fails; strong duality unavailable";
    return r;
  }
  r.kkt = s.certificate;
  DualPoint d{xbar, s.certificate->lamL, s.certificate->lamU, s.certificate->mu};
  r.dual_feasible = dual_feasible(prob, d).feasible();
  r.values_equal = objective(prob, xbar) == dual_objective(prob, d);
  r.dual = std::move(d);
  return r;
}

ConverseResult converse_duality_check(const FimpProblem& prob, const DualPoint& d, const std::vector<Point>& grid,
                                      ConvexityMode mode) {
  if (!is_feasible(prob, d.y)) {
    throw DualPointNotPrimalFeasible("dual point y = " + to_string(d.y) + " is not primal feasible");
  }
  ConverseResult r;
  r.finding.relation = DualityRelation::Converse;
  r.finding.dual = d;
  r.slackness_holds = true;
  for (std::size_t j = 0; j < prob.p; ++j) {
    if (d.mu[j] * eval(prob.h[j], d.y) != 0) r.slackness_holds = false;
  }
  std::vector<Point> candidates;
  for (const auto& x : grid) {
    if (is_feasible(prob, x)) candidates.push_back(x);
  }
  if (std::find(candidates.begin(), candidates.end(), d.y) == candidates.end()) candidates.push_back(d.y);
  r.finding.convexity = convexity_falsify(prob, d.y, candidates, mode);
  r.verdict = classify(prob, candidates, d.y);
  r.membership = mode == ConvexityMode::Generalized ? r.verdict->s2w : r.verdict->s1;
  r.finding.pairs_checked = candidates.size();
  const bool hypothesis = !r.finding.convexity->falsified;
  if (hypothesis && !r.membership) {
    r.finding.status = FindingStatus::Violated;
    r.finding.primal = mode == ConvexityMode::Generalized ? r.verdict->dom_s2w : r.verdict->dom_s1;
    r.finding.note = "convexity supported on the samples but y is dominated";
  } else if (hypothesis) {
    r.finding.note = "convexity supported on the samples and y is grid-certified";
  } else {
    r.finding.note = r.membership ? "convexity falsified at y; y is grid-certified anyway"
                                  : "convexity falsified at y and y is dominated";
  }
  if (!r.slackness_holds) r.finding.note += "; mu_j h_j(y) = 0 fails";
  return r;
}

std::optional<DualPoint> mw_search(const FimpProblem& prob, const Point& y) {
  StationarityFamily fam = assemble_stationarity(prob, y, {.objectives = true, .require_feasible = false});
  SearchResult s = stationarity_search(fam, SearchMode::MondWeir);
  if (!s.certificate) return std::nullopt;
  Verification v = verify_certificate(prob, *s.certificate);
  if (!v.ok) throw Error("Mond-Weir certificate self-check failed: " + v.failure);
  return DualPoint{y, s.certificate->lamL, s.certificate->lamU, s.certificate->mu};
}

}  // namespace fimp
