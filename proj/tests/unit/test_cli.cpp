#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string bin = FIMP_BIN;
const std::string problems = FIMP_PROBLEMS;

int run(const std::string& args, const std::string& out = "/dev/null") {
  const int status = std::system((bin + " " + args + " > " + out + " 2>/dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run("reproduce all") == 0);
    CHECK(run("selftest") == 0);
    CHECK(run("classify " + problems + "/not_cq.json --point 0") == 0);
    CHECK(run("classify " + problems + "/nonsufficiency.json --point 0") == 2);
    CHECK(run("kkt-check " + problems + "/not_cq.json --point 0") == 2);
    CHECK(run("fj-check " + problems + "/not_cq.json --point 0") == 0);
    CHECK(run("cq-check " + problems + "/not_cq.json --point 0") == 2);
    CHECK(run("convexity-check " + problems + "/nonsufficiency.json --point 0") == 2);
    CHECK(run("") == 1);
    CHECK(run("classify /nonexistent.json") == 1);
    CHECK(run("reproduce nope") == 1);
    CHECK(run("classify " + problems + "/not_cq.json --point 5") == 1);
  }

  TEST_CASE("reports do not depend on the worker count") {
    const std::string a = "cli_jobs1.json", b = "cli_jobs4.json";
    CHECK(run("--jobs 1 classify " + problems + "/mw_example.json", a) == run("--jobs 4 classify " + problems + "/mw_example.json", b));
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    std::remove(a.c_str());
    std::remove(b.c_str());
  }
}
