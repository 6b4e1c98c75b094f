#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <string>
#include <vector>

#include "support/subprocess.hpp"

// End-to-end checks against the installed command-line surface. The binary
// path comes from the ORDERCALC_CLI environment variable (set by ctest).

namespace {

using ordercalc::testsupport::RunResult;
using ordercalc::testsupport::nonempty_lines;

const char* cli_path() {
  const char* p = std::getenv("ORDERCALC_CLI");
  REQUIRE_MESSAGE(p != nullptr, "ORDERCALC_CLI must point at the ordercalc binary");
  return p;
}

RunResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
  return ordercalc::testsupport::run_process(cli_path(), args, merge_stderr);
}

std::vector<std::string> lines_of(const std::string& s) { return nonempty_lines(s); }

}  // namespace

TEST_CASE("stirling triangle in text and json") {
  const RunResult text = run_cli({"stirling", "--n-max", "3"});
  CHECK(text.exit_code == 0);
  CHECK(lines_of(text.output) == std::vector<std::string>{"1", "-1 1", "2 -3 1"});

  const RunResult json = run_cli({"stirling", "--n-max", "5", "--style", "json"});
  CHECK(json.exit_code == 0);
  const auto rows = lines_of(json.output);
  REQUIRE(rows.size() == 5);
  const auto row5 = nlohmann::json::parse(rows.back());
  CHECK(row5["n"] == 5);
  CHECK(row5["values"][2] == "35");
}

TEST_CASE("weyl representations match the worked examples") {
  CHECK(run_cli({"weyl", "--n", "1", "--m", "1", "--form", "normal"}).output ==
        "ad a + 1/2 eps\n");
  CHECK(run_cli({"weyl", "--n", "3", "--m", "3", "--form", "symmetric", "--style", "latex"})
            .output == "\\frac{1}{2}\\{N^{3}+(N+1)^{3}\\}+\\frac{1}{4}\\{N+(N+1)\\}\n");

  const RunResult brute = run_cli({"weyl", "--n", "2", "--m", "2", "--form", "brute"});
  CHECK(brute.output ==
        "1/6 ad^2 a^2 + 1/6 ad a ad a + 1/6 ad a^2 ad + 1/6 a ad^2 a + 1/6 a ad a ad + "
        "1/6 a^2 ad^2\n");

  const RunResult checked =
      run_cli({"weyl", "--n", "3", "--m", "2", "--form", "normal", "--check"});
  CHECK(checked.exit_code == 0);
}

TEST_CASE("order transform between the named orderings") {
  CHECK(run_cli({"order", "--expr", "ad a", "--from-s", "1", "--to-s", "0"}).output ==
        "{ad a}_0 - 1/2\n");
  CHECK(run_cli({"order", "--expr", "ad a", "--from-s", "0", "--to-s", "0"}).output ==
        "{ad a}_0\n");
  CHECK(run_cli({"order", "--expr", "a ad", "--from-s", "-1", "--to-s", "1"}).output ==
        "ad a + 1\n");
}

TEST_CASE("verify emits json lines and a zero exit when all hold") {
  const RunResult r = run_cli({"verify", "--identity", "stirling_rel", "--n-max", "10"});
  CHECK(r.exit_code == 0);
  const auto rows = lines_of(r.output);
  CHECK(rows.size() == 30);  // sum over n of 1 + floor((n-1)/2)
  for (const auto& line : rows) {
    const auto parsed = nlohmann::json::parse(line);
    CHECK(parsed["identity"] == "stirling_rel");
    CHECK(parsed["holds"] == true);
  }
}

TEST_CASE("newton and eval wrap the difference machinery") {
  CHECK(run_cli({"newton", "--poly", "N^2", "--eps", "1"}).output == "k=0: 0\nk=1: 1\nk=2: 1\n");
  CHECK(run_cli({"eval", "--expr", "ad a", "--k", "3"}).output == "3*eps\n");
  CHECK(run_cli({"eval", "--expr", "ad^2 a^2", "--k", "1"}).output == "0\n");
}

TEST_CASE("bench reports equal normal forms") {
  const RunResult r = run_cli({"bench", "--n-max", "4", "--style", "json"});
  CHECK(r.exit_code == 0);
  for (const auto& line : lines_of(r.output)) {
    const auto parsed = nlohmann::json::parse(line);
    CHECK(parsed["equal"] == true);
  }
}

TEST_CASE("exit codes distinguish failure classes") {
  // Domain / parse errors exit 2 with a message on stderr.
  const RunResult parse_err =
      run_cli({"order", "--expr", "ad N", "--from-s", "1", "--to-s", "0"}, true);
  CHECK(parse_err.exit_code == 2);
  CHECK(parse_err.output.find("offset 3") != std::string::npos);

  const RunResult cap_err = run_cli({"weyl", "--n", "8", "--m", "8", "--form", "brute"}, true);
  CHECK(cap_err.exit_code == 2);
  CHECK(cap_err.output.find("cap") != std::string::npos);

  const RunResult shape_err =
      run_cli({"order", "--expr", "ad a", "--from-s", "-1", "--to-s", "1"}, true);
  CHECK(shape_err.exit_code == 2);

  // Unknown flags are rejected with a distinct nonzero code.
  const RunResult unknown = run_cli({"stirling", "--n-max", "3", "--bogus"}, true);
  CHECK(unknown.exit_code != 0);
  CHECK(unknown.exit_code != 2);

  // Raising the cap admits the larger enumeration.
  const RunResult ok = run_cli({"weyl", "--n", "8", "--m", "8", "--form", "normal", "--cap", "16"});
  CHECK(ok.exit_code == 0);
}

TEST_CASE("every command accepts --style json and emits parseable json") {
  const std::vector<std::vector<std::string>> cases = {
      {"stirling", "--n-max", "4"},
      {"weyl", "--n", "2", "--m", "2", "--form", "normal"},
      {"weyl", "--n", "2", "--m", "2", "--form", "symmetric"},
      {"weyl", "--n", "2", "--m", "1", "--form", "antinormal"},
      {"weyl", "--n", "2", "--m", "2", "--form", "brute"},
      {"order", "--expr", "ad^2 a", "--from-s", "1", "--to-s", "-1"},
      {"verify", "--identity", "alpha_odd", "--n-max", "6"},
      {"newton", "--poly", "N^3 - 3*N^2 + 2*N"},
      {"eval", "--expr", "(ad a)^2", "--k", "2"},
      {"bench", "--n-max", "3"},
  };
  for (auto args : cases) {
    args.push_back("--style");
    args.push_back("json");
    const RunResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    for (const auto& line : lines_of(r.output)) CHECK(nlohmann::json::accept(line));
  }
}
