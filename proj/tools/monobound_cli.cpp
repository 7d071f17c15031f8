// Command-line front end: load states, print concurrences, sweep the lower
// bounds into CSV, run the verification suites and reproduce the bundled
// example tables.
//
// Exit codes: 0 success, 1 property violation, 2 usage/parse error,
// 3 semantic input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "monobound/bounds.hpp"
#include "monobound/concurrence.hpp"
#include "monobound/format.hpp"
#include "monobound/state_io.hpp"
#include "monobound/sweep.hpp"
#include "monobound/verify.hpp"

namespace {

using namespace monobound;

EntanglementVector vector_of(const StateVariant& state, std::size_t focus) {
  return std::visit([focus](const auto& s) { return concurrence_vector(s, focus); }, state);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << contents;
  if (!out) throw IoError("failed writing output file '" + path + "'");
}

int run_concurrence(const std::string& state_path, std::size_t focus) {
  const StateVariant state = read_state_file(state_path);
  const EntanglementVector ev = vector_of(state, focus);
  std::cout << "total " << (ev.total ? format_numeric(*ev.total) : std::string("n/a")) << "\n";
  std::cout << "pairwise";
  for (double e : ev.pairwise) std::cout << ' ' << format_numeric(e);
  std::cout << "\n";
  return 0;
}

SweepSpec parse_mu_range(const std::string& text, double alpha, double gamma,
                         std::optional<double> gamma_prime) {
  SweepSpec spec;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &spec.mu_min, &spec.mu_max, &spec.mu_step,
                  &trailing) != 3)
    throw ParseError("--mu-range: expected MIN:MAX:STEP, got '" + text + "'");
  spec.alpha = alpha;
  spec.gamma = gamma;
  spec.gamma_prime = gamma_prime;
  spec.validate();
  return spec;
}

int run_bounds(const std::string& state_path, std::size_t focus, double alpha, double gamma,
               std::optional<double> gamma_prime, const std::string& mu_range,
               const std::string& out_path) {
  const SweepSpec spec = parse_mu_range(mu_range, alpha, gamma, gamma_prime);
  const StateVariant state = read_state_file(state_path);
  const EntanglementVector ev = vector_of(state, focus);
  write_file(out_path, sweep_table(ev, spec).to_csv());
  return 0;
}

int run_verify(const std::string& suite, std::size_t samples, std::uint64_t seed) {
  const SuiteResult result = verify_suite(suite, samples, seed);
  std::cout << "suite " << result.suite << ": " << result.checks << " checks, "
            << result.failures << " failures\n";
  if (!result.passed()) {
    std::cout << "first failure: " << result.first_failure << "\n";
    std::cout << "FAIL\n";
    return 1;
  }
  std::cout << "PASS\n";
  return 0;
}

int run_reproduce(int figure, const std::string& out_path) {
  write_file(out_path, figure_table(figure).to_csv());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concurrence monogamy lower bounds"};
  app.require_subcommand(1);

  std::string state_path, mu_range, out_path, suite;
  std::size_t focus = 0;
  double alpha = 2.0, gamma = 1.0;
  double gamma_prime_value = 0.0;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  int figure = 0;

  auto* conc = app.add_subcommand("concurrence", "print the entanglement vector of a state");
  conc->add_option("--state", state_path, "state JSON file")->required();
  conc->add_option("--focus", focus, "focus subsystem index (default 0)");

  auto* bounds = app.add_subcommand("bounds", "sweep the lower bounds over mu into CSV");
  bounds->add_option("--state", state_path, "state JSON file")->required();
  bounds->add_option("--focus", focus, "focus subsystem index (default 0)");
  bounds->add_option("--alpha", alpha, "monogamy power alpha")->required();
  bounds->add_option("--gamma", gamma, "condition weight gamma (k = gamma^alpha)")->required();
  auto* gp_opt = bounds->add_option("--gamma-prime", gamma_prime_value,
                                    "second condition weight (k' = gamma'^alpha)");
  bounds->add_option("--mu-range", mu_range, "mu grid MIN:MAX:STEP")->required();
  bounds->add_option("--out", out_path, "output CSV path")->required();

  auto* verify = app.add_subcommand("verify", "run a property verification suite");
  verify->add_option("--suite", suite, "lemmas | orderings | ckw | states | all")->required();
  verify->add_option("--samples", samples, "sample count (default 100000)");
  verify->add_option("--seed", seed, "RNG seed (default 42)");

  auto* reproduce = app.add_subcommand("reproduce", "emit a bundled example table as CSV");
  reproduce->add_option("--figure", figure, "1 (mixed example) or 2 (pure example)")->required();
  reproduce->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (conc->parsed()) return run_concurrence(state_path, focus);
    if (bounds->parsed()) {
      std::optional<double> gamma_prime;
      if (gp_opt->count() > 0) gamma_prime = gamma_prime_value;
      return run_bounds(state_path, focus, alpha, gamma, gamma_prime, mu_range, out_path);
    }
    if (verify->parsed()) return run_verify(suite, samples, seed);
    if (reproduce->parsed()) return run_reproduce(figure, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
