#include "fimp/golden.hpp"

#include <sstream>

#include "bundled_problems.hpp"
#include "fimp/error.hpp"

namespace fimp {

namespace {

Rational q(const char* s) { return parse_rational(s); }

Point pt(const char* s) { return Point{q(s)}; }

std::string set_text(const SubdiffSet& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.polytopes.size(); ++k) {
    if (k) os << " U ";
    os << "conv{";
    for (std::size_t g = 0; g < s.polytopes[k].size(); ++g) os << (g ? ", " : "") << to_string(s.polytopes[k][g]);
    os << "}";
  }
  return os.str();
}

std::string points_text(const std::vector<Point>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out + "}";
}

class Recorder {
 public:
  explicit Recorder(std::string example) { rep_.example = std::move(example); }

  void fact(std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    rep_.facts.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  }
  void check(std::string name, bool ok, std::string detail = "") {
    rep_.facts.push_back({std::move(name), "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"), ok});
  }
  Json& details() { return rep_.details; }
  GoldenReport take() { return std::move(rep_); }

 private:
  GoldenReport rep_;
};

bool is_zero_singleton(const SubdiffSet& s) { return s.is_singleton() && is_zero(s.polytopes.front().front()); }

}  // namespace

bool GoldenReport::ok() const {
  for (const auto& f : facts) {
    if (!f.ok) return false;
  }
  return !facts.empty();
}

Json GoldenReport::to_json() const {
  Json fs = Json::array();
  for (const auto& f : facts) {
    fs.push_back(Json{{"fact", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"ok", f.ok}});
  }
  return Json{{"example", example}, {"ok", ok()}, {"facts", fs}, {"details", details}};
}

std::vector<std::string> bundled_names() { return {"not-cq", "nonsufficiency", "mw-example"}; }

FimpProblem bundled_problem(std::string_view name) {
  if (name == "not-cq") return parse_problem_text(bundled::kNotCq);
  if (name == "nonsufficiency") return parse_problem_text(bundled::kNonsufficiency);
  if (name == "mw-example") return parse_problem_text(bundled::kMwExample);
  throw Error("unknown bundled problem '" + std::string(name) + "'");
}

GoldenReport reproduce_not_cq() {
  Recorder r("not-cq");
  const FimpProblem prob = bundled_problem("not-cq");
  const Point x0 = pt("0");

  FeasibleGrid fg = feasible_grid(prob, *prob.grid);
  r.fact("feasible grid points", "{(0)}", points_text(fg.points));
  r.check("x = -1 is infeasible (h(-1) = 1)", !is_feasible(prob, pt("-1")));
  r.fact("F(0)", "([1, 2], [3/2, 3])", to_string(objective(prob, x0)));

  StationarityFamily fam = assemble_stationarity(prob, x0);
  r.fact("stationarity LP count", "1", std::to_string(fam.lp_count()));
  auto coeffs = fam.reduced_coefficients();
  std::string coeff_text = "not singleton";
  if (coeffs) {
    Vec flat;
    for (const auto& c : *coeffs) flat.push_back(c[0]);
    coeff_text = to_string(flat);
  }
  r.fact("coefficients of (lamL1, lamL2, lamU1, lamU2, mu)", "(1/2, 1, 3, 5, 0)", coeff_text);
  r.fact("normal cone generators at 0", "{(1)}", points_text(fam.normals));

  SearchResult fj = fritz_john_search(prob, x0);
  r.check("Fritz-John certificate exists", fj.certificate.has_value());
  if (fj.certificate) {
    const auto& c = *fj.certificate;
    r.fact("FJ objective multipliers", "(0, 0, 0, 0)",
           to_string(Vec{c.lamL[0], c.lamL[1], c.lamU[0], c.lamU[1]}));
    r.fact("FJ constraint multiplier", "(1)", to_string(c.mu));
    r.check("FJ certificate re-verifies", verify_certificate(prob, c).ok);
    r.details()["fritz_john"] = to_json(c);
  }
  SearchResult kkt = kkt_search(prob, x0);
  r.check("no KKT certificate", !kkt.certificate.has_value());

  CqResult cq = cq_check(prob, x0);
  r.check("CQ fails", !cq.holds);
  r.fact("CQ witness mu", "(1)", cq.witness ? to_string(cq.witness->mu) : "none");
  r.details()["cq"] = to_json(cq);

  ParetoVerdict v = classify(prob, {x0}, x0);
  r.check("0 is in all four solution sets relative to {0}", v.s1 && v.s2 && v.s1w && v.s2w);

  StrongDualityResult sd = strong_duality_construct(prob, x0);
  r.check("strong duality construction unavailable", !sd.dual.has_value());
  r.fact("strong duality note", "CQ fails; strong duality unavailable", sd.note);
  return r.take();
}

GoldenReport reproduce_nonsufficiency() {
  Recorder r("nonsufficiency");
  const FimpProblem prob = bundled_problem("nonsufficiency");
  const Point x0 = pt("0"), half = pt("1/2");

  std::size_t zero_sets = 0;
  Json sets = Json::array();
  auto record = [&](const std::string& label, const SubdiffSet& s) {
    if (is_zero_singleton(s)) ++zero_sets;
    sets.push_back(Json{{"set", label}, {"value", set_text(s)}});
  };
  for (std::size_t i = 0; i < prob.m; ++i) {
    const std::string k = std::to_string(i + 1);
    record("d fL" + k, subdiff(prob.fL[i], x0));
    record("d fU" + k, subdiff(prob.fU[i], x0));
    record("d gL" + k, subdiff(prob.gL[i], x0));
    record("d gU" + k, subdiff(prob.gU[i], x0));
    record("d+ fL" + k, upper_subdiff(prob.fL[i], x0));
    record("d+ fU" + k, upper_subdiff(prob.fU[i], x0));
    record("d+ gL" + k, upper_subdiff(prob.gL[i], x0));
    record("d+ gU" + k, upper_subdiff(prob.gU[i], x0));
  }
  r.details()["sets_at_0"] = sets;
  r.fact("sets equal to {0} at 0", "16", std::to_string(zero_sets));
  r.check("d h(0) = {0}", is_zero_singleton(subdiff(prob.h[0], x0)));
  r.fact("normal cone generators at 0", "{}", points_text(normal_cone(prob.S, x0).generator_list()));

  SearchResult kkt = kkt_search(prob, x0);
  r.check("KKT certificate at 0", kkt.certificate.has_value());
  if (kkt.certificate) r.details()["kkt"] = to_json(*kkt.certificate);

  r.fact("F(1/2)", "([7/18, 7/10], [11/9, 11/5])", to_string(objective(prob, half)));
  r.fact("F(0)", "([1/2, 1], [3/2, 3])", to_string(objective(prob, x0)));
  r.check("1/2 is feasible", is_feasible(prob, half));

  ParetoVerdict v = classify(prob, {x0, half}, x0);
  r.check("0 not in S2w relative to {0, 1/2}", !v.s2w);
  r.fact("S2w dominator", "(1/2)", v.dom_s2w ? to_string(*v.dom_s2w) : "none");

  GridScan scan = scan_grid(prob, *prob.grid);
  bool zero_dominated = false;
  for (const auto& g : scan.verdicts) {
    if (g.point == x0) zero_dominated = !g.s2w;
  }
  r.check("0 not in S2w on the bundled grid", zero_dominated);

  ConvexityReport conv = convexity_falsify(prob, x0, {half}, ConvexityMode::Generalized);
  r.fact("convexity at 0 with sample 1/2", "falsified", conv.falsified ? "falsified" : "supported");
  if (conv.counterexample) {
    r.check("convexity Farkas witness re-verifies",
            verify_farkas(conv.counterexample->system, conv.counterexample->farkas));
  }
  r.details()["convexity"] = to_json(conv);

  StrongDualityResult sd = strong_duality_construct(prob, x0);
  r.check("strong duality: dual point at 0 is feasible", sd.dual && sd.dual_feasible);
  r.check("strong duality: F(0) = L", sd.values_equal);
  if (sd.dual) {
    ConverseResult cv = converse_duality_check(prob, *sd.dual, prob.grid->points(), ConvexityMode::Generalized);
    r.check("converse check: convexity falsified and 0 dominated",
            cv.finding.convexity->falsified && !cv.membership);
    r.details()["converse"] = to_json(cv);
  }
  return r.take();
}

GoldenReport reproduce_mw_example() {
  Recorder r("mw-example");
  const FimpProblem prob = bundled_problem("mw-example");
  const Point y0 = pt("0"), x1 = pt("1");
  const Rational quarter = q("1/4");
  const DualPoint d{y0, {quarter, quarter}, {quarter, quarter}, {Rational(0)}};

  const SubdiffSet dh = subdiff(prob.h[0], y0);
  r.fact("d h(0)", "conv{(-1)} U conv{(1)}", set_text(dh));
  r.fact("stationarity LP count at 0", "2", std::to_string(assemble_stationarity(prob, y0).lp_count()));

  DualFeasibility feas = dual_feasible(prob, d);
  r.check("dual point (0, 1/4, 1/4, 1/4, 1/4, 0) is dual feasible", feas.feasible());
  r.details()["dual_feasibility"] = to_json(feas);

  r.fact("L at the dual point", "([1/2, 1], [1/2, 1])", to_string(dual_objective(prob, d)));
  r.fact("F(1)", "([0, 0], [0, 0])", to_string(objective(prob, x1)));
  r.check("1 is feasible", is_feasible(prob, x1));
  r.check("F(1) strictly below L", vec_prec_lu_strict(objective(prob, x1), dual_objective(prob, d)));

  auto findings = weak_duality_scan(prob, {x1}, {d}, ConvexityMode::Generalized);
  const bool violated = findings.size() == 1 && findings[0].status == FindingStatus::Violated;
  r.check("weak duality scan reports the violation", violated);
  r.check("violation cross-references falsified convexity at y = 0",
          violated && findings[0].convexity && findings[0].convexity->falsified);
  if (!findings.empty()) r.details()["weak_duality"] = to_json(findings[0]);

  FeasibleGrid fg = feasible_grid(prob, *prob.grid);
  auto grid_findings = weak_duality_scan(prob, fg.points, {d}, ConvexityMode::Generalized);
  r.check("grid scan also reports the violation with falsified convexity",
          grid_findings[0].status == FindingStatus::Violated && grid_findings[0].convexity->falsified);
  return r.take();
}

GoldenReport reproduce(std::string_view name) {
  if (name == "not-cq") return reproduce_not_cq();
  if (name == "nonsufficiency") return reproduce_nonsufficiency();
  if (name == "mw-example") return reproduce_mw_example();
  throw Error("unknown example '" + std::string(name) + "'");
}

}  // namespace fimp
