#include <doctest.h>

#include "../generators.hpp"
#include "fimp/error.hpp"
#include "fimp/golden.hpp"
#include "fimp/io.hpp"

using namespace fimp;

namespace {

const char* kSmall = R"({
  "name": "small", "n": 1, "m": 1, "p": 0,
  "fL": ["x1^2"], "fU": ["x1^2 + 1"], "gL": ["GL"], "gU": ["x1^2 + 3"],
  "h": [],
  "S": {"halfspaces": [{"a": ["1"], "b": "1"}, {"a": ["-1"], "b": "1"}]},
  "grid": {"lo": ["-1"], "hi": ["1"], "steps": [4]}
})";

std::string with_gl(const std::string& gl) {
  std::string s = kSmall;
  s.replace(s.find("GL"), 2, gl);
  return s;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("7/18") == gen::frac(7, 18));
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("0.25") == gen::frac(1, 4));
    CHECK(to_string(gen::frac(6, 4)) == "3/2");
    CHECK(to_string(Rational(-2)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  }

  TEST_CASE("problem files") {
    CHECK_NOTHROW(parse_problem_text(with_gl("1")));
    // gL = x1 + 1 is zero at the grid corner -1.
    CHECK_THROWS_AS(parse_problem_text(with_gl("x1 + 1")), ValidationError);
    CHECK_THROWS_AS(parse_problem_text("{"), ParseError);
    CHECK_THROWS_AS(parse_problem_text(with_gl("x1 +")), ParseError);
    std::string bad_m = with_gl("1");
    bad_m.replace(bad_m.find("\"m\": 1"), 6, "\"m\": 2");
    CHECK_THROWS_AS(parse_problem_text(bad_m), ValidationError);
  }

  TEST_CASE("round-trip and digest") {
    for (const std::string& name : bundled_names()) {
      const FimpProblem p = bundled_problem(name);
      const FimpProblem q = parse_problem_text(serialize_problem(p));
      CHECK(q == p);
      CHECK(problem_digest(q) == problem_digest(p));
      CHECK(problem_digest(p).size() == 16);
    }
    CHECK(problem_digest(bundled_problem("not-cq")) != problem_digest(bundled_problem("nonsufficiency")));
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("random problems round-trip") {
    gen::Rng rng(81);
    for (int t = 0; t < 50; ++t) {
      const FimpProblem p = gen::sos_instance(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 3)),
                                              static_cast<std::size_t>(gen::uniform_int(rng, 1, 3)), 4);
      CHECK(parse_problem_text(serialize_problem(p)) == p);
    }
  }

  TEST_CASE("dual points") {
    const auto duals = parse_dual_points(R"([{"y": ["0"], "lamL": ["1/4", "1/4"], "lamU": ["1/4", "1/4"], "mu": ["0"]}])");
    REQUIRE(duals.size() == 1);
    CHECK(duals[0].lamL[0] == gen::frac(1, 4));
    CHECK(dual_point_from_json(to_json(duals[0])) == duals[0]);
  }

  TEST_CASE("reports carry no floating point values") {
    const FimpProblem p = bundled_problem("nonsufficiency");
    const Json r = make_report("classify", &p, to_json(scan_grid(p, *p.grid)));
    CHECK(r["tool"] == kToolName);
    CHECK(r["version"] == kToolVersion);
    const std::string text = r.dump();
    CHECK(text.find("e-") == std::string::npos);
    std::function<void(const Json&)> walk = [&](const Json& j) {
      CHECK_FALSE(j.is_number_float());
      if (j.is_structured())
        for (const auto& c : j) walk(c);
    };
    walk(r);
  }
}
