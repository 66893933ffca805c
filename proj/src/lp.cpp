#include "fimp/lp.hpp"

#include <limits>

#include "fimp/error.hpp"

namespace fimp {

std::size_t LpProblem::add_var(bool nonnegative) {
  nonneg.push_back(nonnegative);
  for (auto& r : equalities) r.coeffs.emplace_back(0);
  for (auto& r : inequalities) r.coeffs.emplace_back(0);
  return num_vars++;
}

void LpProblem::add_eq(Vec coeffs, Rational rhs) {
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LpProblem::add_le(Vec coeffs, Rational rhs) {
  inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LpProblem::add_ge(Vec coeffs, Rational rhs) {
  add_le(negated(coeffs), -rhs);
}

void LpProblem::validate() const {
  if (nonneg.size() != num_vars) throw MalformedProblem("nonnegativity flags do not match variable count");
  auto check = [&](const std::vector<Row>& rows, const char* what) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].coeffs.size() != num_vars) {
        throw MalformedProblem(std::string(what) + " row " + std::to_string(i) + " has width " +
                               std::to_string(rows[i].coeffs.size()) + ", expected " +
                               std::to_string(num_vars));
      }
    }
  };
  check(equalities, "equality");
  check(inequalities, "inequality");
}

bool satisfies(const LpProblem& problem, const Vec& point) {
  if (point.size() != problem.num_vars) return false;
  for (std::size_t j = 0; j < problem.num_vars; ++j) {
    if (problem.nonneg[j] && point[j] < 0) return false;
  }
  for (const auto& r : problem.equalities) {
    if (dot(r.coeffs, point) != r.rhs) return false;
  }
  for (const auto& r : problem.inequalities) {
    if (dot(r.coeffs, point) > r.rhs) return false;
  }
  return true;
}

bool verify_farkas(const LpProblem& problem, const FarkasWitness& w) {
  if (w.eq_multipliers.size() != problem.equalities.size() ||
      w.le_multipliers.size() != problem.inequalities.size()) {
    return false;
  }
  for (const auto& z : w.le_multipliers) {
    if (z < 0) return false;
  }
  Rational bound = 0;
  Vec combo = zeros(problem.num_vars);
  auto accumulate = [&](const LpProblem::Row& r, const Rational& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < problem.num_vars; ++j) combo[j] += k * r.coeffs[j];
    bound += k * r.rhs;
  };
  for (std::size_t i = 0; i < problem.equalities.size(); ++i) {
    accumulate(problem.equalities[i], w.eq_multipliers[i]);
  }
  for (std::size_t i = 0; i < problem.inequalities.size(); ++i) {
    accumulate(problem.inequalities[i], w.le_multipliers[i]);
  }
  for (std::size_t j = 0; j < problem.num_vars; ++j) {
    if (problem.nonneg[j] ? combo[j] < 0 : combo[j] != 0) return false;
  }
  return bound < 0;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense phase-one tableau. Columns: structural (x+ / x-), slacks, artificials, rhs.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : p_(p) {
    rows_ = p.equalities.size() + p.inequalities.size();
    plus_.assign(p.num_vars, kNone);
    minus_.assign(p.num_vars, kNone);
    std::size_t col = 0;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      plus_[j] = col++;
      if (!p.nonneg[j]) minus_[j] = col++;
    }
    slack0_ = col;
    col += p.inequalities.size();
    art0_ = col;
    col += rows_;
    cols_ = col;
    rhs_ = cols_;

    t_.assign(rows_, Vec(cols_ + 1, Rational(0)));
    sign_.assign(rows_, 1);
    basis_.assign(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const bool is_eq = r < p.equalities.size();
      const auto& row = is_eq ? p.equalities[r] : p.inequalities[r - p.equalities.size()];
      const int s = row.rhs < 0 ? -1 : 1;
      sign_[r] = s;
      for (std::size_t j = 0; j < p.num_vars; ++j) {
        if (row.coeffs[j] == 0) continue;
        t_[r][plus_[j]] = s * row.coeffs[j];
        if (minus_[j] != kNone) t_[r][minus_[j]] = -s * row.coeffs[j];
      }
      if (!is_eq) t_[r][slack0_ + (r - p.equalities.size())] = s;
      t_[r][art0_ + r] = 1;
      t_[r][rhs_] = s * row.rhs;
      basis_[r] = art0_ + r;
    }
    // Reduced costs for minimising the sum of artificials; d[rhs] holds -objective.
    d_.assign(cols_ + 1, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (c >= art0_ && c < art0_ + rows_) continue;
        if (t_[r][c] != 0) d_[c] -= t_[r][c];
      }
    }
  }

  std::size_t run() {
    std::size_t pivots = 0;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (d_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return pivots;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = t_[r][rhs_] / t_[r][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      // Phase one is bounded below by zero, so an improving column always has a pivot row.
      if (leave == kNone) throw Error("simplex: unbounded phase-one column");
      pivot(leave, enter);
      ++pivots;
    }
  }

  bool feasible() const { return d_[rhs_] == 0; }

  Vec point() const {
    Vec xs(cols_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) xs[basis_[r]] = t_[r][rhs_];
    Vec x(p_.num_vars);
    for (std::size_t j = 0; j < p_.num_vars; ++j) {
      x[j] = xs[plus_[j]];
      if (minus_[j] != kNone) x[j] -= xs[minus_[j]];
    }
    return x;
  }

  FarkasWitness farkas() const {
    FarkasWitness w;
    const std::size_t ne = p_.equalities.size();
    w.eq_multipliers.resize(ne);
    w.le_multipliers.resize(rows_ - ne);
    for (std::size_t r = 0; r < rows_; ++r) {
      // Phase-one duals y_r = 1 - (reduced cost of artificial r); the certificate is -y
      // mapped back through the row sign flips.
      Rational y = 1 - d_[art0_ + r];
      Rational u = -sign_[r] * y;
      if (r < ne) {
        w.eq_multipliers[r] = std::move(u);
      } else {
        w.le_multipliers[r - ne] = std::move(u);
      }
    }
    return w;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = t_[r][c];
    for (auto& v : t_[r]) {
      if (v != 0) v /= piv;
    }
    auto eliminate = [&](Vec& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (t_[r][k] != 0) row[k] -= factor * t_[r][k];
      }
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(d_);
    basis_[r] = c;
  }

  const LpProblem& p_;
  std::size_t rows_ = 0, cols_ = 0, rhs_ = 0, slack0_ = 0, art0_ = 0;
  std::vector<std::size_t> plus_, minus_, basis_;
  std::vector<int> sign_;
  std::vector<Vec> t_;
  Vec d_;
};

}  // namespace

LpOutcome lp_feasible(const LpProblem& problem) {
  problem.validate();
  LpOutcome out;
  Tableau tab(problem);
  out.pivots = tab.run();
  out.feasible = tab.feasible();
  if (out.feasible) {
    out.point = tab.point();
    if (!satisfies(problem, out.point)) throw Error("simplex self-check: returned point is infeasible");
  } else {
    out.farkas = tab.farkas();
    if (!verify_farkas(problem, out.farkas)) throw Error("simplex self-check: Farkas witness rejected");
  }
  return out;
}

}  // namespace fimp
