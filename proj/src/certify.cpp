#include "fimp/certify.hpp"

#include "fimp/error.hpp"
#include "fimp/geometry.hpp"

namespace fimp {

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::FritzJohn: return "fritz-john";
    case CertificateKind::KKT: return "kkt";
    case CertificateKind::MondWeir: return "mond-weir";
    case CertificateKind::ConstraintOnly: return "constraint-only";
  }
  return "?";
}

std::string to_string(SlotRole r) {
  switch (r) {
    case SlotRole::FL: return "fL";
    case SlotRole::GU: return "gU";
    case SlotRole::FU: return "fU";
    case SlotRole::GL: return "gL";
    case SlotRole::H: return "h";
  }
  return "?";
}

std::size_t StationarityFamily::lp_count() const {
  std::size_t total = 1;
  for (const auto& s : slots) total *= s.set.polytopes.size();
  return total;
}

bool StationarityFamily::inclusion_based() const {
  for (const auto& s : slots) {
    if (s.set.over_approximate) return true;
  }
  return false;
}

std::optional<std::vector<Vec>> StationarityFamily::reduced_coefficients() const {
  std::vector<Vec> out(multiplier_count(), zeros(n));
  for (const auto& s : slots) {
    if (!s.set.is_singleton()) return std::nullopt;
    out[s.owner] = add(out[s.owner], scaled(s.scale, s.set.polytopes.front().front()));
  }
  return out;
}

StationarityFamily assemble_stationarity(const FimpProblem& prob, const Point& x, AssembleOptions opt) {
  if (x.size() != prob.n) throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates");
  if (opt.require_feasible && !is_feasible(prob, x)) {
    throw PointInfeasible("point " + to_string(x) + " is not feasible");
  }
  StationarityFamily fam;
  fam.x = x;
  fam.n = prob.n;
  fam.m = prob.m;
  fam.p = prob.p;
  fam.objectives = opt.objectives;
  fam.normals = normal_cone(prob.S, x).generator_list();
  for (const auto& hj : prob.h) fam.h_values.push_back(eval(hj, x));
  for (std::size_t j = 0; j < prob.p; ++j) {
    if (fam.h_values[j] == 0) fam.active.push_back(j);
  }
  if (opt.objectives) {
    check_assumptions(prob, x);
    for (std::size_t i = 0; i < prob.m; ++i) {
      const Rational fl = eval(prob.fL[i], x), fu = eval(prob.fU[i], x);
      const Rational gl = eval(prob.gL[i], x), gu = eval(prob.gU[i], x);
      fam.slots.push_back({SlotRole::FL, i, i, 1 / gu, subdiff(prob.fL[i], x)});
      fam.slots.push_back({SlotRole::GU, i, i, -fl / (gu * gu), upper_subdiff(prob.gU[i], x)});
      fam.slots.push_back({SlotRole::FU, i, prob.m + i, 1 / gl, subdiff(prob.fU[i], x)});
      fam.slots.push_back({SlotRole::GL, i, prob.m + i, -fu / (gl * gl), upper_subdiff(prob.gL[i], x)});
    }
  }
  for (std::size_t j = 0; j < prob.p; ++j) {
    fam.slots.push_back({SlotRole::H, j, 2 * prob.m + j, Rational(1), subdiff(prob.h[j], x)});
  }
  return fam;
}

namespace {

bool forced_zero(const StationarityFamily& fam, std::size_t owner, SearchMode mode, const Vec& fixed) {
  const bool is_lambda = owner < 2 * fam.m;
  switch (mode) {
    case SearchMode::Fixed:
      return fixed[owner] == 0;
    case SearchMode::ConstraintOnly:
      if (is_lambda) return true;
      [[fallthrough]];
    case SearchMode::FritzJohn:
    case SearchMode::KKT:
      if (is_lambda) return false;
      return fam.h_values[owner - 2 * fam.m] != 0;
    case SearchMode::MondWeir:
      return false;
  }
  return false;
}

struct Layout {
  std::size_t mult = 0;
  std::vector<std::size_t> weight_start;
  std::size_t normal_start = 0;
  std::size_t total = 0;
};

Layout layout_for(const StationarityFamily& fam, const std::vector<std::size_t>& comps) {
  Layout L;
  L.mult = fam.multiplier_count();
  std::size_t col = L.mult;
  for (std::size_t s = 0; s < fam.slots.size(); ++s) {
    L.weight_start.push_back(col);
    col += fam.slots[s].set.polytopes[comps[s]].size();
  }
  L.normal_start = col;
  L.total = col + fam.normals.size();
  return L;
}

Rational sum(const Vec& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

LpProblem stationarity_lp(const StationarityFamily& fam, const std::vector<std::size_t>& comps, SearchMode mode,
                          const Vec& fixed) {
  if (comps.size() != fam.slots.size()) throw Error("component tuple has the wrong length");
  if (mode == SearchMode::Fixed && fixed.size() != fam.multiplier_count()) {
    throw LengthMismatch("fixed multipliers must have length 2m + p");
  }
  const Layout L = layout_for(fam, comps);
  LpProblem lp(L.total, true);
  const std::size_t m = fam.m;

  // Weights of each slot sum to its multiplier.
  for (std::size_t s = 0; s < fam.slots.size(); ++s) {
    Vec row = lp.row();
    const auto& poly = fam.slots[s].set.polytopes[comps[s]];
    for (std::size_t k = 0; k < poly.size(); ++k) row[L.weight_start[s] + k] = 1;
    row[fam.slots[s].owner] = -1;
    lp.add_eq(std::move(row), 0);
  }
  // Stationarity: Σ scale Σ w g + Σ ν a = 0.
  for (std::size_t d = 0; d < fam.n; ++d) {
    Vec row = lp.row();
    for (std::size_t s = 0; s < fam.slots.size(); ++s) {
      const auto& poly = fam.slots[s].set.polytopes[comps[s]];
      for (std::size_t k = 0; k < poly.size(); ++k) row[L.weight_start[s] + k] = fam.slots[s].scale * poly[k][d];
    }
    for (std::size_t k = 0; k < fam.normals.size(); ++k) row[L.normal_start + k] = fam.normals[k][d];
    lp.add_eq(std::move(row), 0);
  }

  auto unit = [&](std::size_t col) {
    Vec r = lp.row();
    r[col] = 1;
    return r;
  };
  auto range_row = [&](std::size_t from, std::size_t to) {
    Vec r = lp.row();
    for (std::size_t k = from; k < to; ++k) r[k] = 1;
    return r;
  };
  const std::size_t M = fam.multiplier_count();
  switch (mode) {
    case SearchMode::FritzJohn:
      lp.add_eq(range_row(0, M), 1);
      break;
    case SearchMode::KKT:
    case SearchMode::MondWeir:
      // Cone over the stationarity system; rescaled to total 1 afterwards.
      lp.add_eq(range_row(0, 2 * m), 1);
      break;
    case SearchMode::ConstraintOnly:
      for (std::size_t k = 0; k < 2 * m; ++k) lp.add_eq(unit(k), 0);
      lp.add_eq(range_row(2 * m, M), 1);
      break;
    case SearchMode::Fixed:
      for (std::size_t k = 0; k < M; ++k) lp.add_eq(unit(k), fixed[k]);
      break;
  }
  if (mode == SearchMode::FritzJohn || mode == SearchMode::KKT || mode == SearchMode::ConstraintOnly) {
    for (std::size_t j = 0; j < fam.p; ++j) {
      if (fam.h_values[j] != 0) lp.add_eq(unit(2 * m + j), 0);
    }
  }
  if (mode == SearchMode::MondWeir) {
    Vec r = lp.row();
    for (std::size_t j = 0; j < fam.p; ++j) r[2 * m + j] = fam.h_values[j];
    lp.add_ge(std::move(r), 0);
  }
  return lp;
}

namespace {

Certificate decode(const StationarityFamily& fam, const std::vector<std::size_t>& comps, SearchMode mode,
                   const Vec& point) {
  const Layout L = layout_for(fam, comps);
  const std::size_t m = fam.m, p = fam.p;
  Vec mult(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(L.mult));
  Rational total = 1;
  if (mode == SearchMode::KKT || mode == SearchMode::MondWeir) total = sum(mult);

  Certificate c;
  switch (mode) {
    case SearchMode::FritzJohn: c.kind = CertificateKind::FritzJohn; break;
    case SearchMode::KKT: c.kind = CertificateKind::KKT; break;
    case SearchMode::MondWeir:
    case SearchMode::Fixed: c.kind = CertificateKind::MondWeir; break;
    case SearchMode::ConstraintOnly: c.kind = CertificateKind::ConstraintOnly; break;
  }
  c.x = fam.x;
  for (std::size_t i = 0; i < m; ++i) {
    c.lamL.push_back(mult[i] / total);
    c.lamU.push_back(mult[m + i] / total);
  }
  for (std::size_t j = 0; j < p; ++j) c.mu.push_back(mult[2 * m + j] / total);
  if (fam.objectives) {
    c.sel.xL.resize(m);
    c.sel.xU.resize(m);
    c.sel.yL.resize(m);
    c.sel.yU.resize(m);
  }
  c.sel.z.resize(p);
  for (std::size_t s = 0; s < fam.slots.size(); ++s) {
    const auto& slot = fam.slots[s];
    const auto& poly = slot.set.polytopes[comps[s]];
    const Rational& owner = mult[slot.owner];
    Vec chosen;
    if (owner == 0) {
      chosen = poly.front();
    } else {
      chosen = zeros(fam.n);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        const Rational& w = point[L.weight_start[s] + k];
        if (w != 0) chosen = add(chosen, scaled(w / owner, poly[k]));
      }
    }
    switch (slot.role) {
      case SlotRole::FL: c.sel.xL[slot.index] = std::move(chosen); break;
      case SlotRole::FU: c.sel.xU[slot.index] = std::move(chosen); break;
      case SlotRole::GL: c.sel.yL[slot.index] = std::move(chosen); break;
      case SlotRole::GU: c.sel.yU[slot.index] = std::move(chosen); break;
      case SlotRole::H: c.sel.z[slot.index] = std::move(chosen); break;
    }
  }
  c.omega = zeros(fam.n);
  for (std::size_t k = 0; k < fam.normals.size(); ++k) {
    const Rational& v = point[L.normal_start + k];
    if (v != 0) c.omega = add(c.omega, scaled(v / total, fam.normals[k]));
  }
  c.inclusion_based = fam.inclusion_based();
  c.components = comps;
  return c;
}

}  // namespace

SearchResult stationarity_search(const StationarityFamily& fam, SearchMode mode, const Vec& fixed) {
  SearchResult res;
  res.inclusion_based = fam.inclusion_based();
  std::vector<std::size_t> free_slots;
  for (std::size_t s = 0; s < fam.slots.size(); ++s) {
    if (fam.slots[s].set.polytopes.size() > 1 && !forced_zero(fam, fam.slots[s].owner, mode, fixed)) {
      free_slots.push_back(s);
    }
  }
  std::vector<std::size_t> comps(fam.slots.size(), 0);
  for (;;) {
    LpProblem lp = stationarity_lp(fam, comps, mode, fixed);
    LpOutcome out = lp_feasible(lp);
    ++res.lps_solved;
    if (out.feasible) {
      res.certificate = decode(fam, comps, mode, out.point);
      return res;
    }
    res.refutations.push_back(std::move(out.farkas));
    // Odometer over the free slots, last slot fastest.
    std::size_t k = free_slots.size();
    for (;;) {
      if (k == 0) return res;
      --k;
      const std::size_t s = free_slots[k];
      if (++comps[s] < fam.slots[s].set.polytopes.size()) break;
      comps[s] = 0;
    }
  }
}

namespace {

SearchResult checked_search(const FimpProblem& prob, const StationarityFamily& fam, SearchMode mode) {
  SearchResult res = stationarity_search(fam, mode);
  if (res.certificate) {
    Verification v = verify_certificate(prob, *res.certificate);
    if (!v.ok) throw Error("certificate self-check failed: " + v.failure);
  }
  return res;
}

}  // namespace

SearchResult fritz_john_search(const FimpProblem& prob, const Point& x) {
  return checked_search(prob, assemble_stationarity(prob, x), SearchMode::FritzJohn);
}

SearchResult kkt_search(const FimpProblem& prob, const Point& x) {
  return checked_search(prob, assemble_stationarity(prob, x), SearchMode::KKT);
}

CqResult cq_check(const FimpProblem& prob, const Point& x) {
  StationarityFamily fam = assemble_stationarity(prob, x, {.objectives = false, .require_feasible = true});
  CqResult res;
  res.active = fam.active;
  if (fam.active.empty()) return res;
  SearchResult s = checked_search(prob, fam, SearchMode::ConstraintOnly);
  res.lps_solved = s.lps_solved;
  res.refutations = std::move(s.refutations);
  res.holds = !s.certificate.has_value();
  res.witness = std::move(s.certificate);
  return res;
}

Verification verify_certificate(const FimpProblem& prob, const Certificate& c) {
  auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
  const std::size_t n = prob.n, m = prob.m, p = prob.p;
  const bool objectives = c.kind != CertificateKind::ConstraintOnly;
  if (c.x.size() != n || c.lamL.size() != m || c.lamU.size() != m || c.mu.size() != p || c.omega.size() != n) {
    return fail("certificate vectors have the wrong sizes");
  }
  if (c.sel.z.size() != p) return fail("constraint selections have the wrong count");
  if (objectives && (c.sel.xL.size() != m || c.sel.xU.size() != m || c.sel.yL.size() != m || c.sel.yU.size() != m)) {
    return fail("objective selections have the wrong count");
  }
  Rational total = 0, lam = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (c.lamL[i] < 0 || c.lamU[i] < 0) return fail("negative objective multiplier");
    lam += c.lamL[i] + c.lamU[i];
  }
  total = lam;
  for (const auto& v : c.mu) {
    if (v < 0) return fail("negative constraint multiplier");
    total += v;
  }
  if (total != 1) return fail("multipliers sum to " + to_string(total) + ", not 1");
  if (!prob.S.contains(c.x)) return fail("point is outside S");

  Rational mu_h = 0;
  Vec h_values;
  for (std::size_t j = 0; j < p; ++j) {
    h_values.push_back(eval(prob.h[j], c.x));
    mu_h += c.mu[j] * h_values[j];
  }
  switch (c.kind) {
    case CertificateKind::ConstraintOnly:
      if (lam != 0) return fail("objective multipliers must vanish");
      [[fallthrough]];
    case CertificateKind::FritzJohn:
    case CertificateKind::KKT:
      if (!is_feasible(prob, c.x)) return fail("point is not feasible");
      for (std::size_t j = 0; j < p; ++j) {
        if (c.mu[j] * h_values[j] != 0) return fail("complementary slackness fails for h" + std::to_string(j + 1));
      }
      if (c.kind == CertificateKind::KKT && lam == 0) return fail("objective multipliers are all zero");
      break;
    case CertificateKind::MondWeir:
      if (lam == 0) return fail("objective multipliers are all zero");
      if (mu_h < 0) return fail("sum of mu_j h_j is negative");
      break;
  }

  Vec total_vec = c.omega;
  if (!normal_cone(prob.S, c.x).contains(c.omega)) return fail("omega is not in the normal cone");
  for (std::size_t j = 0; j < p; ++j) {
    if (c.sel.z[j].size() != n || !contains(subdiff(prob.h[j], c.x), c.sel.z[j])) {
      return fail("z*" + std::to_string(j + 1) + " is not in the subdifferential of h" + std::to_string(j + 1));
    }
    total_vec = add(total_vec, scaled(c.mu[j], c.sel.z[j]));
  }
  if (objectives) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::string tag = std::to_string(i + 1);
      const Rational fl = eval(prob.fL[i], c.x), fu = eval(prob.fU[i], c.x);
      const Rational gl = eval(prob.gL[i], c.x), gu = eval(prob.gU[i], c.x);
      if (gl <= 0 || gu <= 0) return fail("denominator bound is not positive for objective " + tag);
      if (c.sel.xL[i].size() != n || !contains(subdiff(prob.fL[i], c.x), c.sel.xL[i])) return fail("x*L" + tag + " not in set");
      if (c.sel.xU[i].size() != n || !contains(subdiff(prob.fU[i], c.x), c.sel.xU[i])) return fail("x*U" + tag + " not in set");
      if (c.sel.yL[i].size() != n || !contains(upper_subdiff(prob.gL[i], c.x), c.sel.yL[i])) return fail("y*L" + tag + " not in set");
      if (c.sel.yU[i].size() != n || !contains(upper_subdiff(prob.gU[i], c.x), c.sel.yU[i])) return fail("y*U" + tag + " not in set");
      Vec lower = sub(c.sel.xL[i], scaled(fl / gu, c.sel.yU[i]));
      Vec upper = sub(c.sel.xU[i], scaled(fu / gl, c.sel.yL[i]));
      total_vec = add(total_vec, scaled(c.lamL[i] / gu, lower));
      total_vec = add(total_vec, scaled(c.lamU[i] / gl, upper));
    }
  }
  if (!is_zero(total_vec)) return fail("stationarity sum is " + to_string(total_vec) + ", not zero");
  return {};
}

}  // namespace fimp
