#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fimp/lp.hpp"
#include "fimp/problem.hpp"
#include "fimp/subdiff.hpp"

namespace fimp {

/// One subgradient per function: x*L_i ∈ ∂fL_i, x*U_i ∈ ∂fU_i, y*L_i ∈ ∂⁺gL_i,
/// y*U_i ∈ ∂⁺gU_i, z*_j ∈ ∂h_j.
struct Selections {
  std::vector<Vec> xL, xU, yL, yU, z;
  friend bool operator==(const Selections&, const Selections&) = default;
};

enum class CertificateKind {
  FritzJohn,       // normalised multipliers, complementary slackness
  KKT,             // FritzJohn with (λL, λU) != 0
  MondWeir,        // Σλ > 0, Σ μ_j h_j >= 0 instead of complementary slackness
  ConstraintOnly,  // λ = 0, μ on active constraints only (a CQ failure witness)
};

std::string to_string(CertificateKind k);

/// Multipliers and subgradient choices making the stationarity sum
///   Σ λL_i/gU_i (x*L_i - fL_i/gU_i y*U_i) + Σ λU_i/gL_i (x*U_i - fU_i/gL_i y*L_i)
///   + Σ μ_j z*_j + ω
/// vanish, with ω in the normal cone of S at x.
struct Certificate {
  CertificateKind kind = CertificateKind::FritzJohn;
  Point x;
  Vec lamL, lamU, mu;
  Selections sel;  // objective entries are empty for ConstraintOnly
  Vec omega;
  /// Some set involved is only known to contain the true subdifferential.
  bool inclusion_based = false;
  /// Union component chosen for each slot, in slot order.
  std::vector<std::size_t> components;
};

enum class SlotRole { FL, GU, FU, GL, H };
std::string to_string(SlotRole r);

/// One set in the stationarity sum with its fixed scale and owning multiplier.
struct StationaritySlot {
  SlotRole role;
  std::size_t index;  // objective i or constraint j
  std::size_t owner;  // position in the flat multiplier vector (λL, λU, μ)
  Rational scale;
  SubdiffSet set;
};

struct StationarityFamily {
  Point x;
  std::size_t n = 0, m = 0, p = 0;
  bool objectives = true;
  std::vector<StationaritySlot> slots;
  std::vector<Vec> normals;  // generators of N(x; S)
  Vec h_values;
  std::vector<std::size_t> active;  // J(x) = {j : h_j(x) = 0}

  std::size_t multiplier_count() const { return 2 * m + p; }
  /// Number of LPs in the family (product of union sizes).
  std::size_t lp_count() const;
  bool inclusion_based() const;
  /// When every objective and constraint set is a singleton: the vector each
  /// multiplier multiplies in the stationarity sum, in (λL, λU, μ) order.
  std::optional<std::vector<Vec>> reduced_coefficients() const;
};

struct AssembleOptions {
  bool objectives = true;        // false: constraint sets only (CQ)
  bool require_feasible = true;  // x ∈ Ω; otherwise only x ∈ S
};

/// Throws PointInfeasible, PointNotInSet, UnsupportedKink.
StationarityFamily assemble_stationarity(const FimpProblem& prob, const Point& x, AssembleOptions opt = {});

enum class SearchMode { FritzJohn, KKT, MondWeir, Fixed, ConstraintOnly };

/// The LP for one union-component tuple. Variables: flat multipliers, then one
/// weight per generator of each chosen polytope, then one coefficient per
/// normal-cone generator. `fixed` supplies (λL, λU, μ) in Fixed mode.
LpProblem stationarity_lp(const StationarityFamily& fam, const std::vector<std::size_t>& components, SearchMode mode,
                          const Vec& fixed = {});

struct SearchResult {
  std::optional<Certificate> certificate;
  std::size_t lps_solved = 0;
  bool inclusion_based = false;
  /// Farkas witness of every infeasible LP tried, in enumeration order.
  std::vector<FarkasWitness> refutations;
};

SearchResult stationarity_search(const StationarityFamily& fam, SearchMode mode, const Vec& fixed = {});

SearchResult fritz_john_search(const FimpProblem& prob, const Point& x);
SearchResult kkt_search(const FimpProblem& prob, const Point& x);

struct CqResult {
  bool holds = true;
  std::vector<std::size_t> active;
  std::optional<Certificate> witness;  // present when the CQ fails
  std::size_t lps_solved = 0;
  std::vector<FarkasWitness> refutations;
};

CqResult cq_check(const FimpProblem& prob, const Point& x);

struct Verification {
  bool ok = true;
  std::string failure;
};

/// Exact re-check: memberships, normal cone, normalisation, sign and
/// slackness conditions, and a stationarity sum equal to zero.
Verification verify_certificate(const FimpProblem& prob, const Certificate& cert);

// ---------------------------------------------------------------------------
// Generalized convexity at a point

enum class ConvexityMode { Generalized, Strict };
std::string to_string(ConvexityMode m);

struct ConvexityCounterexample {
  Point sample;
  Selections sel;
  LpProblem system;  // the ν-system (strict mode: homogenised in (ν', τ))
  FarkasWitness farkas;
};

struct ConvexityReport {
  ConvexityMode mode = ConvexityMode::Generalized;
  bool falsified = false;
  std::size_t samples_tested = 0;
  std::size_t tuples_tested = 0;
  std::size_t lps_solved = 0;
  bool inclusion_based = false;
  std::optional<ConvexityCounterexample> counterexample;
};

/// For every sample and every choice of generators from the sets at xbar,
/// looks for ν in the polar of N(xbar; S) satisfying the convexity
/// inequalities. Any infeasible system falsifies. Throws PointNotInSet,
/// SampleOutsideS, UnsupportedKink.
ConvexityReport convexity_falsify(const FimpProblem& prob, const Point& xbar, const std::vector<Point>& samples,
                                  ConvexityMode mode);

/// Same test for one given subgradient choice (need not be generators).
ConvexityReport convexity_check_selection(const FimpProblem& prob, const Point& xbar,
                                          const std::vector<Point>& samples, ConvexityMode mode,
                                          const Selections& sel);

/// The ν-system for one sample and selection.
LpProblem convexity_system(const FimpProblem& prob, const Point& xbar, const Point& sample, ConvexityMode mode,
                           const Selections& sel);

}  // namespace fimp
