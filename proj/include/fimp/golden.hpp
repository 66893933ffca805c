#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fimp/io.hpp"

namespace fimp {

/// One checked statement about a worked example.
struct GoldenFact {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct GoldenReport {
  std::string example;
  std::vector<GoldenFact> facts;
  Json details = Json::object();

  bool ok() const;
  Json to_json() const;
};

/// Names accepted by bundled_problem: "not-cq", "nonsufficiency", "mw-example".
std::vector<std::string> bundled_names();
FimpProblem bundled_problem(std::string_view name);

/// Linear data, two objectives, h = x^2 on S = (-inf, 0]: FJ holds only
/// through the constraint, KKT and the CQ fail.
GoldenReport reproduce_not_cq();
/// Cubic numerators with zero gradient at 0: KKT holds at 0 but 0 is dominated.
GoldenReport reproduce_nonsufficiency();
/// h = -|x|: a feasible Mond–Weir dual point at y = 0 whose value is strictly
/// above F(1).
GoldenReport reproduce_mw_example();

GoldenReport reproduce(std::string_view name);

}  // namespace fimp
