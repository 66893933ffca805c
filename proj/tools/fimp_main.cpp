// Command-line front end: reads a problem file, runs one analysis, writes a
// JSON report. Exit codes: 0 certificate/holds, 2 none/fails, 1 error.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fimp/error.hpp"
#include "fimp/golden.hpp"

namespace {

using namespace fimp;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Point parse_point(const std::string& s) {
  Point x;
  for (const auto& part : split_commas(s)) x.push_back(parse_rational(part));
  return x;
}

GridSpec parse_grid(const std::vector<std::string>& axes) {
  GridSpec g;
  for (const auto& axis : axes) {
    auto parts = split_commas(axis);
    if (parts.size() != 3) throw ValidationError("--grid expects lo,hi,steps (got '" + axis + "')");
    g.lo.push_back(parse_rational(parts[0]));
    g.hi.push_back(parse_rational(parts[1]));
    long steps = std::stol(parts[2]);
    if (steps < 1) throw ValidationError("--grid steps must be at least 1");
    g.steps.push_back(static_cast<unsigned>(steps));
  }
  g.validate();
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string problem;
  std::string point;
  std::vector<std::string> grid;
  std::string mode = "generalized";
  std::string out;
  std::string duals;
  std::string example;
  std::size_t jobs = 1;
  bool timing = false;
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  int run(const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    Json results;
    int code = 0;
    std::optional<FimpProblem> prob;
    if (command == "reproduce" || command == "selftest") {
      code = reproduce(command == "selftest" ? "all" : o_.example, results);
    } else {
      prob = parse_problem(o_.problem);
      code = dispatch(command, *prob, results);
    }
    Json report = make_report(command, prob ? &*prob : nullptr, std::move(results));
    report["exit_code"] = code;
    if (o_.timing) {
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    const std::string text = report.dump(2) + "\n";
    if (o_.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o_.out);
      if (!f) throw Error("cannot write " + o_.out);
      f << text;
    }
    return code;
  }

 private:
  ConvexityMode mode() const {
    if (o_.mode == "generalized") return ConvexityMode::Generalized;
    if (o_.mode == "strict") return ConvexityMode::Strict;
    throw ValidationError("--mode must be generalized or strict");
  }

  Point point(const FimpProblem& prob) const {
    if (o_.point.empty()) throw ValidationError("--point is required");
    Point x = parse_point(o_.point);
    if (x.size() != prob.n) throw ValidationError("--point needs " + std::to_string(prob.n) + " coordinates");
    return x;
  }

  GridSpec grid(const FimpProblem& prob) const {
    if (!o_.grid.empty()) {
      GridSpec g = parse_grid(o_.grid);
      if (g.dimension() != prob.n) throw ValidationError("--grid needs one axis per coordinate");
      return g;
    }
    if (!prob.grid) throw ValidationError("no grid in the problem file; pass --grid");
    return *prob.grid;
  }

  int dispatch(const std::string& command, const FimpProblem& prob, Json& results) {
    if (command == "classify") {
      if (o_.point.empty()) {
        results = to_json(scan_grid(prob, grid(prob), o_.jobs));
        return 0;
      }
      Point x = point(prob);
      FeasibleGrid fg = feasible_grid(prob, grid(prob));
      if (std::find(fg.points.begin(), fg.points.end(), x) == fg.points.end()) fg.points.push_back(x);
      ParetoVerdict v = classify(prob, fg.points, x);
      results = to_json(v);
      results["semantics"] = "grid-certified";
      results["candidates"] = fg.points.size();
      return v.s2w ? 0 : 2;
    }
    if (command == "fj-check" || command == "kkt-check") {
      Point x = point(prob);
      SearchResult r = command == "fj-check" ? fritz_john_search(prob, x) : kkt_search(prob, x);
      results = to_json(r);
      return r.certificate ? 0 : 2;
    }
    if (command == "cq-check") {
      CqResult r = cq_check(prob, point(prob));
      results = to_json(r);
      return r.holds ? 0 : 2;
    }
    if (command == "convexity-check") {
      Point x = point(prob);
      std::vector<Point> samples;
      for (auto& s : grid(prob).points()) {
        if (prob.S.contains(s)) samples.push_back(std::move(s));
      }
      ConvexityReport r = convexity_falsify(prob, x, samples, mode());
      results = to_json(r);
      results["samples"] = "grid points in S";
      return r.falsified ? 2 : 0;
    }
    if (command == "dual-scan") {
      FeasibleGrid fg = feasible_grid(prob, grid(prob));
      if (fg.points.empty()) throw EmptyFeasibleGrid("no feasible grid point");
      std::vector<DualPoint> duals;
      if (!o_.duals.empty()) {
        duals = parse_dual_points(read_file(o_.duals));
      } else {
        for (const auto& y : grid(prob).points()) {
          if (!prob.S.contains(y)) continue;
          try {
            check_assumptions(prob, y);
            if (auto d = mw_search(prob, y)) duals.push_back(std::move(*d));
          } catch (const AssumptionViolated&) {
          } catch (const UnsupportedKink&) {
          }
        }
      }
      auto findings = weak_duality_scan(prob, fg.points, duals, mode(), o_.jobs);
      Json arr = Json::array();
      std::size_t violations = 0;
      for (const auto& f : findings) {
        if (f.status == FindingStatus::Violated) ++violations;
        arr.push_back(to_json(f));
      }
      results = Json{{"primal_points", fg.points.size()},
                     {"dual_points", duals.size()},
                     {"violations", violations},
                     {"findings", arr}};
      return violations == 0 ? 0 : 2;
    }
    throw ValidationError("unknown command " + command);
  }

  int reproduce(const std::string& which, Json& results) {
    std::vector<std::string> names = which == "all" ? bundled_names() : std::vector<std::string>{which};
    results = Json::array();
    bool ok = true;
    for (const auto& n : names) {
      GoldenReport g = fimp::reproduce(n);
      ok = ok && g.ok();
      results.push_back(g.to_json());
    }
    return ok ? 0 : 2;
  }

  const Options& o_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for fractional interval-valued multiobjective programs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write the JSON report to this file");
  app.add_option("--jobs", o.jobs, "Worker threads for grid scans")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "Add wall-clock time to the report");

  auto with_problem = [&](CLI::App* sub, bool needs_point, bool needs_mode) {
    sub->add_option("problem", o.problem, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--grid", o.grid, "Grid axis lo,hi,steps (repeat per coordinate)");
    if (needs_point) sub->add_option("--point", o.point, "Point as comma-separated rationals");
    if (needs_mode) {
      sub->add_option("--mode", o.mode, "generalized or strict")->check(CLI::IsMember({"generalized", "strict"}));
    }
  };
  with_problem(app.add_subcommand("classify", "Grid-certified Pareto classification"), true, false);
  with_problem(app.add_subcommand("fj-check", "Fritz-John multiplier search at --point"), true, false);
  with_problem(app.add_subcommand("kkt-check", "KKT multiplier search at --point"), true, false);
  with_problem(app.add_subcommand("cq-check", "Constraint qualification at --point"), true, false);
  with_problem(app.add_subcommand("convexity-check", "Generalized convexity falsifier at --point"), true, true);
  auto* dual = app.add_subcommand("dual-scan", "Weak duality scan over the grid");
  with_problem(dual, false, true);
  dual->add_option("--duals", o.duals, "JSON array of dual points")->check(CLI::ExistingFile);
  auto* rep = app.add_subcommand("reproduce", "Re-check the bundled worked examples");
  rep->add_option("example", o.example, "not-cq, nonsufficiency, mw-example or all")
      ->required()
      ->check(CLI::IsMember({"not-cq", "nonsufficiency", "mw-example", "all"}));
  app.add_subcommand("selftest", "Run every bundled example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    Runner runner(o);
    return runner.run(app.get_subcommands().front()->get_name());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
