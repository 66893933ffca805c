#include "fimp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fimp/error.hpp"

namespace fimp {

namespace {

std::string need_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational_from(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ValidationError(std::string(what) + " must be a rational string such as \"7/18\"");
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ValidationError(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Expr> exprs_from(const Json& j, const char* key, std::size_t n) {
  std::vector<Expr> out;
  if (!j.contains(key)) {
    if (std::string(key) == "h") return out;
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array of strings");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string label = std::string(key) + "[" + std::to_string(i + 1) + "]";
    const std::string text = need_string(arr[i], label.c_str());
    try {
      out.push_back(parse_expr(text, n));
    } catch (const ParseError& e) {
      throw ParseError(e.position(), e.token(), "in " + label + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

Vec parse_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  Vec v;
  for (const auto& e : j) v.push_back(rational_from(e, what));
  return v;
}

FimpProblem problem_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("problem file must hold a JSON object");
  FimpProblem p;
  if (j.contains("name")) p.name = need_string(j.at("name"), "name");
  p.n = count_from(j, "n");
  p.m = count_from(j, "m");
  p.p = j.contains("p") ? count_from(j, "p") : 0;
  p.fL = exprs_from(j, "fL", p.n);
  p.fU = exprs_from(j, "fU", p.n);
  p.gL = exprs_from(j, "gL", p.n);
  p.gU = exprs_from(j, "gU", p.n);
  p.h = exprs_from(j, "h", p.n);
  std::vector<Halfspace> hs;
  if (j.contains("S")) {
    const Json& S = j.at("S");
    if (!S.is_object() || !S.contains("halfspaces") || !S.at("halfspaces").is_array()) {
      throw ValidationError("\"S\" must be an object with a \"halfspaces\" array");
    }
    for (const auto& h : S.at("halfspaces")) {
      hs.push_back({parse_vector(field(h, "a"), "halfspace a"), rational_from(field(h, "b"), "halfspace b")});
    }
  }
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    GridSpec spec;
    spec.lo = parse_vector(field(g, "lo"), "grid lo");
    spec.hi = parse_vector(field(g, "hi"), "grid hi");
    const Json& steps = field(g, "steps");
    if (!steps.is_array()) throw ValidationError("grid steps must be an array");
    for (const auto& s : steps) {
      if (!s.is_number_integer() || s.get<long long>() < 1) throw ValidationError("grid steps must be integers >= 1");
      spec.steps.push_back(s.get<unsigned>());
    }
    p.grid = std::move(spec);
  }
  try {
    p.S = Polyhedron(p.n, std::move(hs));
    p.validate_shape();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  if (!p.S.is_nonempty()) throw ValidationError("S is empty");
  if (p.grid) {
    for (const auto& c : p.grid->corners()) {
      if (!p.S.contains(c)) continue;
      try {
        check_assumptions(p, c);
      } catch (const AssumptionViolated& e) {
        throw ValidationError(std::string("grid corner check: ") + e.what());
      }
    }
  }
  return p;
}

FimpProblem parse_problem_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "", std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(j);
}

FimpProblem parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json problem_to_json(const FimpProblem& prob) {
  auto exprs = [](const std::vector<Expr>& es) {
    Json a = Json::array();
    for (const auto& e : es) a.push_back(to_string(e));
    return a;
  };
  Json j;
  if (!prob.name.empty()) j["name"] = prob.name;
  j["n"] = prob.n;
  j["m"] = prob.m;
  j["p"] = prob.p;
  j["fL"] = exprs(prob.fL);
  j["fU"] = exprs(prob.fU);
  j["gL"] = exprs(prob.gL);
  j["gU"] = exprs(prob.gU);
  j["h"] = exprs(prob.h);
  Json hs = Json::array();
  for (const auto& h : prob.S.halfspaces()) hs.push_back(Json{{"a", to_json(h.a)}, {"b", to_string(h.b)}});
  j["S"] = Json{{"halfspaces", hs}};
  if (prob.grid) {
    j["grid"] = Json{{"lo", to_json(prob.grid->lo)}, {"hi", to_json(prob.grid->hi)}, {"steps", prob.grid->steps}};
  }
  return j;
}

std::string serialize_problem(const FimpProblem& prob) { return problem_to_json(prob).dump(2); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string problem_digest(const FimpProblem& prob) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(problem_to_json(prob).dump())));
  return buf;
}

Json to_json(const Interval& a) { return Json::array({to_string(a.lo()), to_string(a.hi())}); }

Json to_json(const IntervalVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

Json to_json(const ParetoVerdict& v) {
  auto flag = [](bool ok, const std::optional<Point>& dom) {
    Json f{{"member", ok}};
    if (dom) f["dominator"] = to_json(*dom);
    return f;
  };
  return Json{{"point", to_json(v.point)},
              {"F", to_json(v.value)},
              {"S1", flag(v.s1, v.dom_s1)},
              {"S2", flag(v.s2, v.dom_s2)},
              {"S1w", flag(v.s1w, v.dom_s1w)},
              {"S2w", flag(v.s2w, v.dom_s2w)}};
}

Json to_json(const GridScan& s) {
  Json verdicts = Json::array();
  for (const auto& v : s.verdicts) verdicts.push_back(to_json(v));
  Json excluded = Json::array();
  for (const auto& e : s.excluded) excluded.push_back(Json{{"point", to_json(e.point)}, {"reason", e.reason}});
  return Json{{"semantics", "grid-certified"},
              {"grid_points", s.grid_points},
              {"infeasible_points", s.infeasible_points},
              {"excluded", excluded},
              {"verdicts", verdicts}};
}

namespace {
Json vec_list(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}
}  // namespace

Json to_json(const Certificate& c) {
  Json sel{{"xL", vec_list(c.sel.xL)}, {"xU", vec_list(c.sel.xU)}, {"yL", vec_list(c.sel.yL)},
           {"yU", vec_list(c.sel.yU)}, {"z", vec_list(c.sel.z)}};
  return Json{{"kind", to_string(c.kind)},
              {"x", to_json(c.x)},
              {"lamL", to_json(c.lamL)},
              {"lamU", to_json(c.lamU)},
              {"mu", to_json(c.mu)},
              {"selections", sel},
              {"omega", to_json(c.omega)},
              {"inclusion_based", c.inclusion_based},
              {"components", c.components}};
}

Json to_json(const FarkasWitness& w) {
  return Json{{"eq_multipliers", to_json(w.eq_multipliers)}, {"le_multipliers", to_json(w.le_multipliers)}};
}

Json to_json(const LpProblem& lp) {
  auto rows = [](const std::vector<LpProblem::Row>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(Json{{"coeffs", to_json(r.coeffs)}, {"rhs", to_string(r.rhs)}});
    return a;
  };
  std::vector<bool> nn = lp.nonneg;
  return Json{{"num_vars", lp.num_vars}, {"nonneg", nn}, {"equalities", rows(lp.equalities)},
              {"inequalities", rows(lp.inequalities)}};
}

Json to_json(const SearchResult& r) {
  Json j{{"found", r.certificate.has_value()}, {"lps_solved", r.lps_solved}, {"inclusion_based", r.inclusion_based}};
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  return j;
}

Json to_json(const CqResult& r) {
  Json j{{"holds", r.holds}, {"active", r.active}, {"lps_solved", r.lps_solved}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.holds && !r.refutations.empty()) {
    Json f = Json::array();
    for (const auto& w : r.refutations) f.push_back(to_json(w));
    j["farkas"] = f;
  }
  return j;
}

Json to_json(const ConvexityReport& r) {
  Json j{{"mode", to_string(r.mode)},
         {"verdict", r.falsified ? "falsified" : "supported (sampled)"},
         {"samples_tested", r.samples_tested},
         {"tuples_tested", r.tuples_tested},
         {"lps_solved", r.lps_solved},
         {"inclusion_based", r.inclusion_based}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = Json{{"sample", to_json(c.sample)},
                               {"selections", Json{{"xL", vec_list(c.sel.xL)},
                                                   {"xU", vec_list(c.sel.xU)},
                                                   {"yL", vec_list(c.sel.yL)},
                                                   {"yU", vec_list(c.sel.yU)},
                                                   {"z", vec_list(c.sel.z)}}},
                               {"system", to_json(c.system)},
                               {"farkas", to_json(c.farkas)}};
  }
  return j;
}

Json to_json(const DualPoint& d) {
  return Json{{"y", to_json(d.y)}, {"lamL", to_json(d.lamL)}, {"lamU", to_json(d.lamU)}, {"mu", to_json(d.mu)}};
}

Json to_json(const DualFeasibility& f) {
  Json j{{"feasible", f.feasible()},
         {"y_in_S", f.y_in_S},
         {"nonnegative", f.nonnegative},
         {"normalized", f.normalized},
         {"lambda_nonzero", f.lambda_nonzero},
         {"mu_h_nonnegative", f.mu_h_nonnegative},
         {"stationarity", f.stationarity}};
  if (!f.note.empty()) j["note"] = f.note;
  if (f.witness) j["witness"] = to_json(*f.witness);
  return j;
}

Json to_json(const DualityFinding& f) {
  Json j{{"relation", to_string(f.relation)}, {"status", to_string(f.status)}, {"pairs_checked", f.pairs_checked}};
  if (f.primal) j["primal"] = to_json(*f.primal);
  if (f.dual) j["dual"] = to_json(*f.dual);
  if (f.convexity) j["convexity"] = to_json(*f.convexity);
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Json to_json(const StrongDualityResult& r) {
  Json j{{"cq_holds", r.cq_holds}, {"dual_feasible", r.dual_feasible}, {"values_equal", r.values_equal}};
  if (r.kkt) j["kkt"] = to_json(*r.kkt);
  if (r.dual) j["dual"] = to_json(*r.dual);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ConverseResult& r) {
  Json j = to_json(r.finding);
  j["slackness_holds"] = r.slackness_holds;
  j["membership"] = r.membership;
  if (r.verdict) j["verdict"] = to_json(*r.verdict);
  return j;
}

DualPoint dual_point_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("dual point must be an object");
  return DualPoint{parse_vector(field(j, "y"), "y"), parse_vector(field(j, "lamL"), "lamL"),
                   parse_vector(field(j, "lamU"), "lamU"),
                   j.contains("mu") ? parse_vector(j.at("mu"), "mu") : Vec{}};
}

std::vector<DualPoint> parse_dual_points(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ValidationError("dual points file must hold a JSON array");
  std::vector<DualPoint> out;
  for (const auto& e : j) out.push_back(dual_point_from_json(e));
  return out;
}

Json make_report(const std::string& command, const FimpProblem* prob, Json results) {
  Json j{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
  if (prob) {
    j["problem"] = prob->name;
    j["problem_digest"] = problem_digest(*prob);
  }
  j["results"] = std::move(results);
  return j;
}

}  // namespace fimp
