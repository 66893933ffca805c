#include "fimp/problem.hpp"

#include <algorithm>

#include "fimp/error.hpp"

namespace fimp {

void GridSpec::validate() const {
  if (lo.size() != hi.size() || lo.size() != steps.size()) {
    throw MalformedProblem("grid lo, hi and steps must have equal lengths");
  }
  if (lo.empty()) throw MalformedProblem("grid has no axes");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (steps[i] < 1) throw MalformedProblem("grid steps must be at least 1 on axis " + std::to_string(i + 1));
    if (lo[i] > hi[i]) throw MalformedProblem("grid lo exceeds hi on axis " + std::to_string(i + 1));
  }
}

std::size_t GridSpec::size() const {
  std::size_t total = 1;
  for (unsigned s : steps) total *= static_cast<std::size_t>(s) + 1;
  return total;
}

std::vector<Point> GridSpec::points() const {
  validate();
  const std::size_t n = lo.size();
  std::vector<Vec> axes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational step = (hi[i] - lo[i]) / steps[i];
    for (unsigned k = 0; k <= steps[i]; ++k) axes[i].push_back(lo[i] + step * k);
  }
  std::vector<Point> out;
  out.reserve(size());
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = axes[i][idx[i]];
    out.push_back(std::move(x));
    std::size_t axis = n;
    while (axis > 0) {
      --axis;
      if (++idx[axis] < axes[axis].size()) break;
      idx[axis] = 0;
      if (axis == 0) return out;
    }
  }
}

std::vector<Point> GridSpec::corners() const {
  validate();
  const std::size_t n = lo.size();
  std::vector<Point> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> (n - 1 - i)) & 1 ? hi[i] : lo[i];
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

void FimpProblem::validate_shape() const {
  auto need = [&](const std::vector<Expr>& v, std::size_t len, const char* what) {
    if (v.size() != len) {
      throw MalformedProblem(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(len));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].arity() > n) {
        throw MalformedProblem(std::string(what) + "[" + std::to_string(i + 1) + "] uses x" +
                               std::to_string(v[i].arity()) + " but n = " + std::to_string(n));
      }
    }
  };
  if (n == 0) throw MalformedProblem("dimension n must be at least 1");
  if (m == 0) throw MalformedProblem("need at least one objective");
  need(fL, m, "fL");
  need(fU, m, "fU");
  need(gL, m, "gL");
  need(gU, m, "gU");
  need(h, p, "h");
  if (S.dimension() != n) throw MalformedProblem("S has dimension " + std::to_string(S.dimension()));
  if (grid) {
    grid->validate();
    if (grid->dimension() != n) throw MalformedProblem("grid dimension differs from n");
  }
}

void check_assumptions(const FimpProblem& prob, const Point& x) {
  for (std::size_t i = 0; i < prob.m; ++i) {
    const Rational fl = eval(prob.fL[i], x), fu = eval(prob.fU[i], x);
    const Rational gl = eval(prob.gL[i], x), gu = eval(prob.gU[i], x);
    const std::string where = " for objective " + std::to_string(i + 1) + " at " + to_string(x);
    if (fl < 0) throw AssumptionViolated("fL >= 0 fails" + where + " (fL = " + to_string(fl) + ")");
    if (fl > fu) {
      throw AssumptionViolated("fL <= fU fails" + where + " (fL = " + to_string(fl) + ", fU = " + to_string(fu) + ")");
    }
    if (gl <= 0) throw AssumptionViolated("gL > 0 fails" + where + " (gL = " + to_string(gl) + ")");
    if (gl > gu) {
      throw AssumptionViolated("gL <= gU fails" + where + " (gL = " + to_string(gl) + ", gU = " + to_string(gu) + ")");
    }
  }
}

IntervalVector objective(const FimpProblem& prob, const Point& x) {
  if (x.size() != prob.n) throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates");
  check_assumptions(prob, x);
  std::vector<Interval> comps;
  comps.reserve(prob.m);
  for (std::size_t i = 0; i < prob.m; ++i) {
    comps.emplace_back(eval(prob.fL[i], x) / eval(prob.gU[i], x), eval(prob.fU[i], x) / eval(prob.gL[i], x));
  }
  return IntervalVector(std::move(comps));
}

bool is_feasible(const FimpProblem& prob, const Point& x) {
  if (!prob.S.contains(x)) return false;
  for (const auto& hj : prob.h) {
    if (eval(hj, x) > 0) return false;
  }
  return true;
}

std::vector<std::size_t> active_constraints(const FimpProblem& prob, const Point& x) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < prob.p; ++j) {
    if (eval(prob.h[j], x) == 0) out.push_back(j);
  }
  return out;
}

}  // namespace fimp
