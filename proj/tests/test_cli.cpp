// Spawns the CLI binary and checks exit codes, printed values and the
// byte-level stability of the emitted CSV files.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "monobound/state_io.hpp"
#include "monobound/sweep.hpp"

using namespace monobound;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_run_output.tmp";
  const std::string cmd = std::string(MONOBOUND_CLI_PATH) + " " + args + " > " + out_path +
                          " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(out_path.c_str());
  return r;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("concurrence subcommand prints the example values") {
  write_file("example1.json", write_state_json(demo_pure_state()));
  const RunResult r = run_cli("concurrence --state example1.json --focus 0");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output ==
          "total 0.942809041582\npairwise 0.816496580928 0.471404520791\n");
}

TEST_CASE("concurrence subcommand reports n/a for mixed states") {
  write_file("example2.json", write_state_json(demo_mixed_state()));
  const RunResult r = run_cli("concurrence --state example2.json");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output ==
          "total n/a\npairwise 0.577350269190 0.235702260396\n");
}

TEST_CASE("concurrence subcommand on the vacuum prints zeros") {
  write_file("vacuum.json", write_state_json(make_pure({1, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 2})));
  const RunResult r = run_cli("concurrence --state vacuum.json");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "total 0\npairwise 0 0\n");
}

TEST_CASE("malformed input exits with code 2 and names the field") {
  write_file("broken.json", "{\"dims\": [2,2], \"type\": \"pure\"}");
  const RunResult r = run_cli("concurrence --state broken.json");
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.output.find("amplitudes") != std::string::npos);

  const RunResult missing = run_cli("concurrence --state does_not_exist.json");
  REQUIRE(missing.exit_code == 2);
}

TEST_CASE("non-qubit input exits with code 3") {
  write_file("qutrit.json", write_state_json(make_pure({1, 0, 0}, {3})));
  const RunResult r = run_cli("concurrence --state qutrit.json");
  REQUIRE(r.exit_code == 3);
}

TEST_CASE("usage errors exit with code 2") {
  REQUIRE(run_cli("concurrence").exit_code == 2);
  REQUIRE(run_cli("frobnicate --x 1").exit_code == 2);
}

TEST_CASE("verify subcommand passes and rejects unknown suites") {
  const RunResult r = run_cli("verify --suite lemmas --samples 100000 --seed 42");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("PASS") != std::string::npos);
  REQUIRE(r.output.find("0 failures") != std::string::npos);

  REQUIRE(run_cli("verify --suite nonsense --samples 10 --seed 1").exit_code == 2);
}

TEST_CASE("reproduce emits deterministic CSV with the documented header") {
  const RunResult r1 = run_cli("reproduce --figure 2 --out fig2_a.csv");
  REQUIRE(r1.exit_code == 0);
  const RunResult r2 = run_cli("reproduce --figure 2 --out fig2_b.csv");
  REQUIRE(r2.exit_code == 0);
  const std::string a = read_file("fig2_a.csv");
  REQUIRE(a == read_file("fig2_b.csv"));
  REQUIRE(a.rfind("mu,state_value,thm3,baseline_lemma1,baseline_simple\n", 0) == 0);
  // Equality row at mu = 2.
  REQUIRE(a.find("2.00000000000,0.790123456790,0.790123456790,") != std::string::npos);
  REQUIRE(a.find('\r') == std::string::npos);

  const RunResult bad = run_cli("reproduce --figure 5 --out fig5.csv");
  REQUIRE(bad.exit_code == 2);
  std::remove("fig2_a.csv");
  std::remove("fig2_b.csv");
}

TEST_CASE("bounds subcommand sweeps a pure state into CSV") {
  write_file("example1.json", write_state_json(demo_pure_state()));
  const RunResult r = run_cli(
      "bounds --state example1.json --alpha 2 --gamma 1.4142135623730951 "
      "--mu-range 2:4:0.5 --out bounds1.csv");
  REQUIRE(r.exit_code == 0);
  const std::string csv = read_file("bounds1.csv");
  REQUIRE(csv.rfind("mu,state_value,thm3,baseline_lemma1,baseline_simple,trivial_sum,warnings\n",
                    0) == 0);
  // 5 grid points + header; state_value column populated.
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    REQUIRE(line.find(",,") != 0);  // mu and state_value populated
  }
  REQUIRE(rows == 5);
  std::remove("bounds1.csv");
}

TEST_CASE("bounds subcommand output keeps thm3 above baseline_lemma1 on every row") {
  write_file("example1.json", write_state_json(demo_pure_state()));
  const RunResult r = run_cli(
      "bounds --state example1.json --alpha 2 --gamma 1.4142135623730951 "
      "--mu-range 2:10:0.05 --out bounds_full.csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(read_file("bounds_full.csv"));
  std::string line;
  std::getline(lines, line);  // header: mu,state_value,thm3,baseline_lemma1,...
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string mu, state, thm3, baseline;
    std::getline(cells, mu, ',');
    std::getline(cells, state, ',');
    std::getline(cells, thm3, ',');
    std::getline(cells, baseline, ',');
    REQUIRE_FALSE(thm3.empty());
    REQUIRE_FALSE(baseline.empty());
    REQUIRE(std::stod(thm3) >= std::stod(baseline) - 1e-12);
    ++rows;
  }
  REQUIRE(rows == 161);
  std::remove("bounds_full.csv");
}

TEST_CASE("bounds subcommand leaves state_value empty for mixed states") {
  write_file("example2.json", write_state_json(demo_mixed_state()));
  const RunResult r = run_cli(
      "bounds --state example2.json --alpha 2 --gamma 1.4142135623730951 "
      "--mu-range 2:2:1 --out bounds2.csv");
  REQUIRE(r.exit_code == 0);
  const std::string csv = read_file("bounds2.csv");
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  // mu, then an empty state_value cell.
  REQUIRE(row.find("2.00000000000,,") == 0);
  std::remove("bounds2.csv");
}

TEST_CASE("bounds subcommand rejects a bad mu range with exit 2") {
  write_file("example1.json", write_state_json(demo_pure_state()));
  REQUIRE(run_cli("bounds --state example1.json --alpha 2 --gamma 1 "
                  "--mu-range nonsense --out x.csv")
              .exit_code == 2);
  REQUIRE(run_cli("bounds --state example1.json --alpha 2 --gamma 1 "
                  "--mu-range 4:2:0.5 --out x.csv")
              .exit_code == 2);
}

TEST_CASE("states written by the tool round-trip to identical output") {
  const PureState psi = haar_random_pure(3, 20250810);
  write_file("roundtrip.json", write_state_json(psi));
  const RunResult first = run_cli("concurrence --state roundtrip.json");
  REQUIRE(first.exit_code == 0);

  // Re-read, re-write, re-run: byte-identical output.
  const StateVariant back = read_state_file("roundtrip.json");
  write_file("roundtrip2.json", write_state_json(back));
  const RunResult second = run_cli("concurrence --state roundtrip2.json");
  REQUIRE(second.exit_code == 0);
  REQUIRE(first.output == second.output);
  std::remove("roundtrip.json");
  std::remove("roundtrip2.json");
}
