#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monobound/bounds.hpp"
#include "monobound/concurrence.hpp"
#include "monobound/errors.hpp"
#include "monobound/format.hpp"
#include "monobound/states.hpp"

namespace monobound {

/// A mu grid plus the fixed bound parameters of a sweep.
struct SweepSpec {
  double mu_min = 2.0;
  double mu_max = 10.0;
  double mu_step = 0.05;
  double alpha = 2.0;
  double gamma = 1.0;
  std::optional<double> gamma_prime;

  void validate() const {
    if (!(mu_min >= 1.0)) throw DomainError("sweep: mu_min must be >= 1");
    if (!(mu_step > 0.0)) throw DomainError("sweep: mu_step must be > 0");
    if (!(mu_max >= mu_min)) throw DomainError("sweep: mu_max must be >= mu_min");
  }

  std::vector<double> grid() const {
    validate();
    const auto count =
        static_cast<std::size_t>(std::floor((mu_max - mu_min) / mu_step + 1e-9)) + 1;
    std::vector<double> mus(count);
    for (std::size_t i = 0; i < count; ++i) mus[i] = mu_min + static_cast<double>(i) * mu_step;
    return mus;
  }
};

struct SweepRow {
  double mu = 0.0;
  BoundReport report;
};

/// Evaluates compare_bounds on every grid point (eta = alpha * mu).
inline std::vector<SweepRow> run_sweep(const EntanglementVector& ev, const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (double mu : spec.grid()) {
    const BoundParams p =
        BoundParams::from_gamma(spec.alpha, spec.alpha * mu, spec.gamma, spec.gamma_prime);
    rows.push_back(SweepRow{mu, compare_bounds(ev, p)});
  }
  return rows;
}

namespace detail {

inline std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string out;
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i) out += "; ";
    out += warnings[i];
  }
  return out;
}

}  // namespace detail

/// CSV table for the bounds sweep of one state's entanglement vector.
///
/// Columns: mu, state_value, then thm3 (N = 3) or thm1 and thm4 (N >= 4),
/// baseline_lemma1, baseline_simple, trivial_sum, warnings. Bounds whose
/// conditions fail leave empty cells and a note in the warnings column.
inline CsvTable sweep_table(const EntanglementVector& ev, const SweepSpec& spec) {
  const bool tripartite = ev.pairwise.size() == 2;
  CsvTable table;
  table.header = {"mu", "state_value"};
  if (tripartite) {
    table.header.push_back("thm3");
  } else {
    table.header.push_back("thm1");
    table.header.push_back("thm4");
  }
  table.header.insert(table.header.end(),
                      {"baseline_lemma1", "baseline_simple", "trivial_sum", "warnings"});

  for (const SweepRow& row : run_sweep(ev, spec)) {
    std::vector<std::string> cells;
    cells.push_back(format_numeric(row.mu));
    cells.push_back(format_optional(row.report.total_power));
    if (tripartite) {
      cells.push_back(format_optional(row.report.thm3));
    } else {
      cells.push_back(format_optional(row.report.thm1));
      cells.push_back(format_optional(row.report.thm4));
    }
    cells.push_back(format_optional(row.report.baseline_lemma1));
    cells.push_back(format_optional(row.report.baseline_simple));
    cells.push_back(format_numeric(row.report.trivial_sum));
    cells.push_back(detail::join_warnings(row.report.warnings));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

/// The two bundled demonstration states.
inline PureState demo_pure_state() {
  const double s3 = std::sqrt(3.0) / 3.0;
  const double s6 = std::sqrt(6.0) / 6.0;
  const double s2 = std::sqrt(2.0) / 2.0;
  return acin_state(s3, 0.0, s6, s2, 0.0, 0.0);
}

inline DensityMatrix demo_mixed_state() {
  return w_mixture(std::sqrt(2.0) / 3.0, std::sqrt(6.0) / 3.0, 1.0 / 3.0, 0.75);
}

/// Reproduction tables: mu from 2 to 10 in steps of 0.05, alpha = 2, k = 2.
///
/// Figure 2 sweeps the pure demonstration state (columns state_value, thm3,
/// baseline_lemma1, baseline_simple); figure 1 sweeps the mixed one (same
/// columns minus state_value).
inline CsvTable figure_table(int which) {
  if (which != 1 && which != 2) throw DomainError("figure_table: figure must be 1 or 2");

  EntanglementVector ev;
  CsvTable table;
  if (which == 2) {
    ev = concurrence_vector(demo_pure_state(), 0);
    table.header = {"mu", "state_value", "thm3", "baseline_lemma1", "baseline_simple"};
  } else {
    ev = concurrence_vector(demo_mixed_state(), 0);
    table.header = {"mu", "thm3", "baseline_lemma1", "baseline_simple"};
  }

  SweepSpec spec;  // defaults: mu in [2, 10] step 0.05
  for (double mu : spec.grid()) {
    // k = 2 held exactly across the sweep.
    const BoundParams p = BoundParams::from_k(2.0, 2.0 * mu, 2.0);
    std::vector<std::string> cells;
    cells.push_back(format_numeric(mu));
    if (which == 2) cells.push_back(format_numeric(pow_real(*ev.total, p.eta)));
    cells.push_back(format_numeric(thm3_bound(ev.pairwise[0], ev.pairwise[1], p)));
    cells.push_back(format_numeric(baseline_lemma1_bound(ev, p)));
    cells.push_back(format_numeric(baseline_simple_bound(ev, p)));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace monobound
