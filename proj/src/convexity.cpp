#include "fimp/certify.hpp"
#include "fimp/error.hpp"
#include "fimp/geometry.hpp"

namespace fimp {

std::string to_string(ConvexityMode m) { return m == ConvexityMode::Strict ? "strict" : "generalized"; }

LpProblem convexity_system(const FimpProblem& prob, const Point& xbar, const Point& x, ConvexityMode mode,
                           const Selections& sel) {
  const std::size_t n = prob.n;
  const bool strict = mode == ConvexityMode::Strict;
  // Strict mode works in (ν', τ) with ν = ν'/τ, τ >= 1, so that "< Δ" becomes "<= -1".
  LpProblem lp(n, false);
  const std::size_t tau = strict ? lp.add_var(true) : 0;
  auto row_for = [&](const Vec& g, const Rational& k, const Rational& delta) {
    Vec r = lp.row();
    for (std::size_t d = 0; d < n; ++d) r[d] = k * g[d];
    if (strict) r[tau] = -delta;
    return r;
  };
  const Cone normals = normal_cone(prob.S, xbar);
  for (const auto& a : normals.generator_list()) lp.add_le(row_for(a, 1, 0), 0);
  auto delta = [&](const Expr& e) -> Rational { return eval(e, x) - eval(e, xbar); };
  for (std::size_t i = 0; i < prob.m; ++i) {
    const Rational dl = delta(prob.fL[i]), du = delta(prob.fU[i]);
    if (strict) {
      lp.add_le(row_for(sel.xL[i], 1, dl), -1);
      lp.add_le(row_for(sel.xU[i], 1, du), -1);
    } else {
      lp.add_le(row_for(sel.xL[i], 1, 0), dl);
      lp.add_le(row_for(sel.xU[i], 1, 0), du);
    }
  }
  for (std::size_t i = 0; i < prob.m; ++i) {
    const Rational dl = delta(prob.gL[i]), du = delta(prob.gU[i]);
    if (strict) {
      lp.add_le(row_for(sel.yL[i], -1, -dl), 0);
      lp.add_le(row_for(sel.yU[i], -1, -du), 0);
    } else {
      lp.add_le(row_for(sel.yL[i], -1, 0), -dl);
      lp.add_le(row_for(sel.yU[i], -1, 0), -du);
    }
  }
  for (std::size_t j = 0; j < prob.p; ++j) {
    const Rational dh = delta(prob.h[j]);
    if (strict) {
      lp.add_le(row_for(sel.z[j], 1, dh), 0);
    } else {
      lp.add_le(row_for(sel.z[j], 1, 0), dh);
    }
  }
  if (strict) {
    Vec r = lp.row();
    r[tau] = -1;
    lp.add_le(std::move(r), -1);
  }
  return lp;
}

namespace {

void check_inputs(const FimpProblem& prob, const Point& xbar, const std::vector<Point>& samples) {
  if (!prob.S.contains(xbar)) throw PointNotInSet("point " + to_string(xbar) + " is not in S");
  for (const auto& x : samples) {
    if (x.size() != prob.n || !prob.S.contains(x)) throw SampleOutsideS("sample " + to_string(x) + " is not in S");
  }
}

// Tests one selection against every sample; returns true when it falsifies.
bool test_selection(const FimpProblem& prob, const Point& xbar, const std::vector<Point>& samples, ConvexityMode mode,
                    const Selections& sel, ConvexityReport& rep, std::vector<char>& seen) {
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Point& x = samples[s];
    if (mode == ConvexityMode::Strict && x == xbar) continue;
    if (!seen[s]) {
      seen[s] = 1;
      ++rep.samples_tested;
    }
    LpProblem lp = convexity_system(prob, xbar, x, mode, sel);
    LpOutcome out = lp_feasible(lp);
    ++rep.lps_solved;
    if (!out.feasible) {
      rep.falsified = true;
      rep.counterexample = ConvexityCounterexample{x, sel, std::move(lp), std::move(out.farkas)};
      return true;
    }
  }
  return false;
}

}  // namespace

ConvexityReport convexity_falsify(const FimpProblem& prob, const Point& xbar, const std::vector<Point>& samples,
                                  ConvexityMode mode) {
  check_inputs(prob, xbar, samples);
  ConvexityReport rep;
  rep.mode = mode;
  // Generator lists in selection order: fL, fU, gL, gU per objective, then h.
  std::vector<std::vector<Vec>> gens;
  auto take = [&](const SubdiffSet& s) {
    rep.inclusion_based = rep.inclusion_based || s.over_approximate;
    gens.push_back(s.all_generators());
  };
  for (std::size_t i = 0; i < prob.m; ++i) take(subdiff(prob.fL[i], xbar));
  for (std::size_t i = 0; i < prob.m; ++i) take(subdiff(prob.fU[i], xbar));
  for (std::size_t i = 0; i < prob.m; ++i) take(upper_subdiff(prob.gL[i], xbar));
  for (std::size_t i = 0; i < prob.m; ++i) take(upper_subdiff(prob.gU[i], xbar));
  for (std::size_t j = 0; j < prob.p; ++j) take(subdiff(prob.h[j], xbar));

  const std::size_t m = prob.m;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<char> seen(samples.size(), 0);
  for (;;) {
    Selections sel;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Vec& g = gens[k][pick[k]];
      if (k < m) sel.xL.push_back(g);
      else if (k < 2 * m) sel.xU.push_back(g);
      else if (k < 3 * m) sel.yL.push_back(g);
      else if (k < 4 * m) sel.yU.push_back(g);
      else sel.z.push_back(g);
    }
    ++rep.tuples_tested;
    if (test_selection(prob, xbar, samples, mode, sel, rep, seen)) return rep;
    std::size_t k = gens.size();
    for (;;) {
      if (k == 0) return rep;
      --k;
      if (++pick[k] < gens[k].size()) break;
      pick[k] = 0;
    }
  }
}

ConvexityReport convexity_check_selection(const FimpProblem& prob, const Point& xbar,
                                          const std::vector<Point>& samples, ConvexityMode mode,
                                          const Selections& sel) {
  check_inputs(prob, xbar, samples);
  if (sel.xL.size() != prob.m || sel.xU.size() != prob.m || sel.yL.size() != prob.m || sel.yU.size() != prob.m ||
      sel.z.size() != prob.p) {
    throw LengthMismatch("selection counts do not match the problem");
  }
  ConvexityReport rep;
  rep.mode = mode;
  rep.tuples_tested = 1;
  std::vector<char> seen(samples.size(), 0);
  test_selection(prob, xbar, samples, mode, sel, rep, seen);
  return rep;
}

}  // namespace fimp
