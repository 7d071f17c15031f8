#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monobound/concurrence.hpp"
#include "monobound/errors.hpp"
#include "monobound/tolerances.hpp"

namespace monobound {

/// x^p with integer p evaluated by repeated multiplication (binary powering)
/// for determinism and exactness near equality points; std::pow otherwise.
inline double pow_real(double base, double exponent) {
  const double rounded = std::round(exponent);
  if (std::abs(exponent - rounded) < tol::integer_power && rounded >= 0.0 &&
      rounded <= 1024.0) {
    double result = 1.0;
    double factor = base;
    auto n = static_cast<unsigned long>(rounded);
    while (n > 0) {
      if (n & 1u) result *= factor;
      factor *= factor;
      n >>= 1u;
    }
    return result;
  }
  return std::pow(base, exponent);
}

/// Exponent and weight parameters of the bound evaluators.
///
/// alpha is the power at which the measure is monogamous (2 for qubit
/// concurrence), eta the target power, mu = eta/alpha, k = gamma^alpha and
/// k' = gamma'^alpha the condition weights.
struct BoundParams {
  double alpha = 2.0;
  double eta = 4.0;
  double gamma = 1.0;
  std::optional<double> gamma_prime;
  double mu = 2.0;
  double k = 1.0;
  std::optional<double> k_prime;
  std::optional<std::size_t> m;

  static BoundParams from_gamma(double alpha, double eta, double gamma,
                                std::optional<double> gamma_prime = std::nullopt) {
    if (alpha < 1.0) throw DomainError("BoundParams: alpha must be >= 1");
    if (gamma < 1.0) throw DomainError("BoundParams: gamma must be >= 1");
    if (gamma_prime && *gamma_prime < 1.0)
      throw DomainError("BoundParams: gamma' must be >= 1");
    BoundParams p;
    p.alpha = alpha;
    p.eta = eta;
    p.gamma = gamma;
    p.gamma_prime = gamma_prime;
    p.mu = eta / alpha;
    if (p.mu < 1.0) throw DomainError("BoundParams: mu = eta/alpha must be >= 1");
    p.k = pow_real(gamma, alpha);
    if (gamma_prime) p.k_prime = pow_real(*gamma_prime, alpha);
    return p;
  }

  /// Builds from k (and k') directly, avoiding the gamma -> gamma^alpha
  /// round trip when an exact k is wanted.
  static BoundParams from_k(double alpha, double eta, double k,
                            std::optional<double> k_prime = std::nullopt) {
    if (alpha < 1.0) throw DomainError("BoundParams: alpha must be >= 1");
    if (k < 1.0) throw DomainError("BoundParams: k must be >= 1");
    if (k_prime && *k_prime < 1.0) throw DomainError("BoundParams: k' must be >= 1");
    BoundParams p;
    p.alpha = alpha;
    p.eta = eta;
    p.mu = eta / alpha;
    if (p.mu < 1.0) throw DomainError("BoundParams: mu = eta/alpha must be >= 1");
    p.k = k;
    p.k_prime = k_prime;
    p.gamma = pow_real(k, 1.0 / alpha);
    if (k_prime) p.gamma_prime = pow_real(*k_prime, 1.0 / alpha);
    return p;
  }
};

// ---------------------------------------------------------------------------
// Scalar inequality right-hand sides.
//
// Each bounds (1+x)^mu from below on 0 <= x <= 1/k. The x^mu coefficients
// they produce also drive the multiparty evaluators further down.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_lemma_domain(double x, double k, double mu, double mu_min,
                               const char* where) {
  if (!(k >= 1.0 - tol::domain_slack))
    throw DomainError(std::string(where) + ": k must be >= 1");
  if (!(mu >= mu_min - tol::domain_slack))
    throw DomainError(std::string(where) + ": mu out of range");
  if (!(x >= -tol::domain_slack) || !(x * k <= 1.0 + tol::domain_slack))
    throw DomainError(std::string(where) + ": x must lie in [0, 1/k]");
}

// x^mu coefficient of the three-term bound with the linear term k*mu/(k+1)*x.
inline double cascade_coeff_a(double k, double mu) {
  return pow_real(k + 1.0, mu) - (1.0 + mu / (k + 1.0)) * pow_real(k, mu);
}

// x^mu coefficient of the three-term bound with the linear term mu*x
// (requires mu >= 2).
inline double cascade_coeff_b(double k, double mu) {
  return pow_real(k + 1.0, mu) - mu * pow_real(k, mu - 1.0) - pow_real(k, mu);
}

// x^mu coefficient of the two-term bound 1 + [(k+1)^mu - k^mu] x^mu.
inline double simple_coeff(double k, double mu) {
  return pow_real(k + 1.0, mu) - pow_real(k, mu);
}

}  // namespace detail

/// 1 + (k mu/(k+1)) x + [(k+1)^mu - (1 + mu/(k+1)) k^mu] x^mu,
/// for 0 <= x <= 1/k, k >= 1, mu >= 1.
inline double lemma1_rhs(double x, double k, double mu) {
  detail::check_lemma_domain(x, k, mu, 1.0, "lemma1_rhs");
  return 1.0 + k * mu / (k + 1.0) * x + detail::cascade_coeff_a(k, mu) * pow_real(x, mu);
}

/// Checks (1+x)^mu >= 1 + mu x (up to the inequality tolerance), x >= 0, mu >= 1.
inline bool lemma2_check(double x, double mu) {
  if (!(x >= -tol::domain_slack)) throw DomainError("lemma2_check: x must be >= 0");
  if (!(mu >= 1.0 - tol::domain_slack)) throw DomainError("lemma2_check: mu must be >= 1");
  return pow_real(1.0 + x, mu) >= 1.0 + mu * x - tol::inequality;
}

/// 1 + mu x + (2^mu - mu - 1) x^mu, for 0 <= x <= 1, mu >= 2.
inline double lemma3_rhs(double x, double mu) {
  detail::check_lemma_domain(x, 1.0, mu, 2.0, "lemma3_rhs");
  return 1.0 + mu * x + (pow_real(2.0, mu) - mu - 1.0) * pow_real(x, mu);
}

/// 1 + mu x + [(k+1)^mu - mu k^{mu-1} - k^mu] x^mu, for 0 <= x <= 1/k,
/// k >= 1, mu >= 2.
inline double lemma4_rhs(double x, double k, double mu) {
  detail::check_lemma_domain(x, k, mu, 2.0, "lemma4_rhs");
  return 1.0 + mu * x + detail::cascade_coeff_b(k, mu) * pow_real(x, mu);
}

/// 1 + [(k+1)^mu - k^mu] x^mu, for 0 <= x <= 1/k, k >= 1, mu >= 1.
inline double baseline_simple_rhs(double x, double k, double mu) {
  detail::check_lemma_domain(x, k, mu, 1.0, "baseline_simple_rhs");
  return 1.0 + detail::simple_coeff(k, mu) * pow_real(x, mu);
}

// ---------------------------------------------------------------------------
// Partition search and the multiparty lower bounds.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<double> powers_of(const std::vector<double>& e, double p) {
  std::vector<double> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = pow_real(e[i], p);
  return out;
}

// suffix[i] = sum of v[i..end).
inline std::vector<double> suffix_sums(const std::vector<double>& v) {
  std::vector<double> s(v.size() + 1, 0.0);
  for (std::size_t i = v.size(); i-- > 0;) s[i] = s[i + 1] + v[i];
  return s;
}

}  // namespace detail

/// Largest m in [1, N-3] such that, on the given ordering,
///   pairwise[i] >= gamma * (sum of the entries after i)   for i = 1..m, and
///   gamma' * pairwise[j] <= (sum of the entries after j)  for j = m+1..N-2.
/// Indices here are 1-based as in the condition statements.
inline std::size_t partition_m(const EntanglementVector& ev, double gamma,
                               double gamma_prime) {
  const std::vector<double>& e = ev.pairwise;
  const std::size_t n = e.size();  // n = N - 1
  if (n < 3) throw TooShort("partition_m: needs at least 3 pairwise entries (N >= 4)");
  if (gamma < 1.0 || gamma_prime < 1.0)
    throw DomainError("partition_m: gamma and gamma' must be >= 1");

  const std::vector<double> tail = detail::suffix_sums(e);
  // head_ok[i0]: e[0..i0] all satisfy the gamma chain (0-based).
  // tail_ok[j0]: e[j0..n-2] all satisfy the gamma' chain.
  std::vector<bool> head_ok(n, false), tail_ok(n, true);
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    ok = ok && e[i] >= gamma * tail[i + 1];
    head_ok[i] = ok;
  }
  ok = true;
  for (std::size_t j = n - 1; j-- > 0;) {  // j over 0..n-2
    ok = ok && gamma_prime * e[j] <= tail[j + 1];
    tail_ok[j] = ok;
  }

  for (std::size_t m = n - 2; m >= 1; --m) {  // m in [1, N-3]
    if (head_ok[m - 1] && tail_ok[m]) return m;
  }
  throw NoValidPartition("partition_m: no m satisfies both condition chains");
}

namespace detail {

struct PreparedVector {
  std::vector<double> e_eta;        // E_i^eta
  std::vector<double> e_alpha;      // E_i^alpha
  std::vector<double> e_eta_alpha;  // E_i^(eta-alpha)
  std::vector<double> tail_alpha;   // suffix sums of e_alpha
  std::size_t n = 0;
};

inline PreparedVector prepare(const EntanglementVector& ev, const BoundParams& p) {
  for (double e : ev.pairwise)
    if (e < 0.0) throw DomainError("entanglement values must be nonnegative");
  PreparedVector pv;
  pv.e_eta = powers_of(ev.pairwise, p.eta);
  pv.e_alpha = powers_of(ev.pairwise, p.alpha);
  pv.e_eta_alpha = powers_of(ev.pairwise, p.eta - p.alpha);
  pv.tail_alpha = suffix_sums(pv.e_alpha);
  pv.n = ev.pairwise.size();
  return pv;
}

inline double require_k_prime(const BoundParams& p, const char* where) {
  if (!p.k_prime) throw DomainError(std::string(where) + ": gamma' (k') is required");
  return *p.k_prime;
}

inline std::size_t resolve_partition(const EntanglementVector& ev, const BoundParams& p,
                                     const char* where) {
  if (p.m) {
    if (*p.m < 1 || *p.m + 2 > ev.pairwise.size())
      throw DomainError(std::string(where) + ": partition m out of range");
    return *p.m;
  }
  if (!p.gamma_prime) throw DomainError(std::string(where) + ": gamma' (k') is required");
  try {
    return partition_m(ev, p.gamma, *p.gamma_prime);
  } catch (const TooShort&) {
    throw ConditionViolated(std::string(where) + ": needs N >= 4");
  } catch (const NoValidPartition&) {
    throw ConditionViolated(std::string(where) + ": no valid partition m");
  }
}

// Shared cascade of the partition-style bounds. The per-level bracket is
//   E_i^eta + cross * E_i^(eta-alpha) * tail_alpha(i)
// weighted by coeff^{i-1}; the gamma' section contributes the middle
// [(k'+1)^mu - k'^mu] block and the closing three-term block.
inline double partition_cascade(const PreparedVector& pv, double coeff, double cross,
                                double coeff_close, double cross_close,
                                double middle_coeff, std::size_t m) {
  const std::size_t n = pv.n;
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t i0 = 0; i0 < m; ++i0) {
    sum += weight * (pv.e_eta[i0] + cross * pv.e_eta_alpha[i0] * pv.tail_alpha[i0 + 1]);
    weight *= coeff;
  }
  // weight = coeff^m from here on.
  double middle = 0.0;
  for (std::size_t j0 = m; j0 + 3 <= n; ++j0) middle += pv.e_eta[j0];
  sum += weight * middle_coeff * middle;
  sum += weight * (coeff_close * pv.e_eta[n - 2] +
                   cross_close * pv.e_alpha[n - 2] * pv.e_eta_alpha[n - 1] +
                   pv.e_eta[n - 1]);
  return sum;
}

// Strong-condition check: E_i >= gamma * (sum of later entries) for
// i = 1..N-2 on the raw values.
inline bool strong_condition(const EntanglementVector& ev, double gamma) {
  const std::vector<double> tail = suffix_sums(ev.pairwise);
  for (std::size_t i = 0; i + 1 < ev.pairwise.size(); ++i)
    if (!(ev.pairwise[i] >= gamma * tail[i + 1])) return false;
  return true;
}

// Strong-condition cascade shared by the all-parties bounds.
inline double strong_cascade(const PreparedVector& pv, double coeff, double cross) {
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t i0 = 0; i0 + 1 < pv.n; ++i0) {
    sum += weight * (pv.e_eta[i0] + cross * pv.e_eta_alpha[i0] * pv.tail_alpha[i0 + 1]);
    weight *= coeff;
  }
  sum += weight * pv.e_eta[pv.n - 1];
  return sum;
}

}  // namespace detail

/// Partition-style lower bound built from the lemma1_rhs blocks.
/// Needs mu >= 1, N >= 4 and a valid partition m.
inline double thm1_bound(const EntanglementVector& ev, const BoundParams& p) {
  if (p.mu < 1.0 - tol::domain_slack) throw DomainError("thm1_bound: mu must be >= 1");
  const std::size_t m = detail::resolve_partition(ev, p, "thm1_bound");
  const double kp = detail::require_k_prime(p, "thm1_bound");
  const detail::PreparedVector pv = detail::prepare(ev, p);
  if (pv.n < 3) throw ConditionViolated("thm1_bound: needs N >= 4");
  return detail::partition_cascade(pv, detail::cascade_coeff_a(p.k, p.mu),
                                   p.k * p.mu / (p.k + 1.0),
                                   detail::cascade_coeff_a(kp, p.mu),
                                   kp * p.mu / (kp + 1.0),
                                   detail::simple_coeff(kp, p.mu), m);
}

/// Strong-condition lower bound from the lemma1_rhs cascade over all
/// leading parties. Needs mu >= 1 and E_i >= gamma * tail for i = 1..N-2.
inline double thm2_bound(const EntanglementVector& ev, const BoundParams& p) {
  if (p.mu < 1.0 - tol::domain_slack) throw DomainError("thm2_bound: mu must be >= 1");
  if (ev.pairwise.empty()) throw ConditionViolated("thm2_bound: empty vector");
  if (!detail::strong_condition(ev, p.gamma))
    throw ConditionViolated("thm2_bound: strong condition fails");
  const detail::PreparedVector pv = detail::prepare(ev, p);
  return detail::strong_cascade(pv, detail::cascade_coeff_a(p.k, p.mu),
                                p.k * p.mu / (p.k + 1.0));
}

/// Tripartite lower bound from the lemma4_rhs block. Needs mu >= 2 and
/// either e1 >= gamma e2 (case 1) or gamma e1 <= e2 (case 2, roles swapped).
inline double thm3_bound(double e1, double e2, const BoundParams& p) {
  if (p.mu < 2.0 - tol::domain_slack) throw DomainError("thm3_bound: mu must be >= 2");
  if (e1 < 0.0 || e2 < 0.0) throw DomainError("thm3_bound: values must be nonnegative");
  double big, small;
  if (e1 >= p.gamma * e2) {
    big = e1;
    small = e2;
  } else if (p.gamma * e1 <= e2) {
    big = e2;
    small = e1;
  } else {
    throw ConditionViolated("thm3_bound: neither case condition applies");
  }
  return pow_real(big, p.eta) +
         p.mu * pow_real(big, p.eta - p.alpha) * pow_real(small, p.alpha) +
         detail::cascade_coeff_b(p.k, p.mu) * pow_real(small, p.eta);
}

/// Partition-style lower bound built from the lemma4_rhs blocks.
/// Needs mu >= 2, N >= 4 and a valid partition m.
inline double thm4_bound(const EntanglementVector& ev, const BoundParams& p) {
  if (p.mu < 2.0 - tol::domain_slack) throw DomainError("thm4_bound: mu must be >= 2");
  const std::size_t m = detail::resolve_partition(ev, p, "thm4_bound");
  const double kp = detail::require_k_prime(p, "thm4_bound");
  const detail::PreparedVector pv = detail::prepare(ev, p);
  if (pv.n < 3) throw ConditionViolated("thm4_bound: needs N >= 4");
  return detail::partition_cascade(pv, detail::cascade_coeff_b(p.k, p.mu), p.mu,
                                   detail::cascade_coeff_b(kp, p.mu), p.mu,
                                   detail::simple_coeff(kp, p.mu), m);
}

/// Strong-condition lower bound from the lemma4_rhs cascade.
/// Needs mu >= 2 and E_i >= gamma * tail for i = 1..N-2.
inline double thm5_bound(const EntanglementVector& ev, const BoundParams& p) {
  if (p.mu < 2.0 - tol::domain_slack) throw DomainError("thm5_bound: mu must be >= 2");
  if (ev.pairwise.empty()) throw ConditionViolated("thm5_bound: empty vector");
  if (!detail::strong_condition(ev, p.gamma))
    throw ConditionViolated("thm5_bound: strong condition fails");
  const detail::PreparedVector pv = detail::prepare(ev, p);
  return detail::strong_cascade(pv, detail::cascade_coeff_b(p.k, p.mu), p.mu);
}

/// Comparison bound assembled from lemma1_rhs blocks only.
///
/// For N = 3 this is the single three-term lemma1 block on (big, small).
/// For N >= 4 the leading cascade keeps E_i^eta with simple-coefficient
/// weights while the gamma' section stays as in the partition bounds.
inline double baseline_lemma1_bound(const EntanglementVector& ev, const BoundParams& p) {
  if (p.mu < 1.0 - tol::domain_slack)
    throw DomainError("baseline_lemma1_bound: mu must be >= 1");
  const std::vector<double>& e = ev.pairwise;
  if (e.size() == 2) {
    double big, small;
    if (e[0] >= p.gamma * e[1]) {
      big = e[0];
      small = e[1];
    } else if (p.gamma * e[0] <= e[1]) {
      big = e[1];
      small = e[0];
    } else {
      throw ConditionViolated("baseline_lemma1_bound: neither case condition applies");
    }
    return pow_real(big, p.eta) +
           p.k * p.mu / (p.k + 1.0) * pow_real(big, p.eta - p.alpha) *
               pow_real(small, p.alpha) +
           detail::cascade_coeff_a(p.k, p.mu) * pow_real(small, p.eta);
  }
  const std::size_t m = detail::resolve_partition(ev, p, "baseline_lemma1_bound");
  const double kp = detail::require_k_prime(p, "baseline_lemma1_bound");
  const detail::PreparedVector pv = detail::prepare(ev, p);
  if (pv.n < 3) throw ConditionViolated("baseline_lemma1_bound: needs N >= 3");
  const double sc = detail::simple_coeff(p.k, p.mu);
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t i0 = 0; i0 < m; ++i0) {
    sum += weight * pv.e_eta[i0];
    weight *= sc;
  }
  double middle = 0.0;
  for (std::size_t j0 = m; j0 + 3 <= pv.n; ++j0) middle += pv.e_eta[j0];
  sum += weight * detail::simple_coeff(kp, p.mu) * middle;
  sum += weight * (detail::cascade_coeff_a(kp, p.mu) * pv.e_eta[pv.n - 2] +
                   kp * p.mu / (kp + 1.0) * pv.e_alpha[pv.n - 2] * pv.e_eta_alpha[pv.n - 1] +
                   pv.e_eta[pv.n - 1]);
  return sum;
}

/// Comparison bound assembled from baseline_simple_rhs blocks only.
inline double baseline_simple_bound(const EntanglementVector& ev, const BoundParams& p) {
  if (p.mu < 1.0 - tol::domain_slack)
    throw DomainError("baseline_simple_bound: mu must be >= 1");
  const std::vector<double>& e = ev.pairwise;
  if (e.size() == 2) {
    double big, small;
    if (e[0] >= p.gamma * e[1]) {
      big = e[0];
      small = e[1];
    } else if (p.gamma * e[0] <= e[1]) {
      big = e[1];
      small = e[0];
    } else {
      throw ConditionViolated("baseline_simple_bound: neither case condition applies");
    }
    return pow_real(big, p.eta) + detail::simple_coeff(p.k, p.mu) * pow_real(small, p.eta);
  }
  const std::size_t m = detail::resolve_partition(ev, p, "baseline_simple_bound");
  const double kp = detail::require_k_prime(p, "baseline_simple_bound");
  const detail::PreparedVector pv = detail::prepare(ev, p);
  if (pv.n < 3) throw ConditionViolated("baseline_simple_bound: needs N >= 3");
  const double sc = detail::simple_coeff(p.k, p.mu);
  const double scp = detail::simple_coeff(kp, p.mu);
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t i0 = 0; i0 < m; ++i0) {
    sum += weight * pv.e_eta[i0];
    weight *= sc;
  }
  double middle = 0.0;
  for (std::size_t j0 = m; j0 + 2 <= pv.n; ++j0) middle += pv.e_eta[j0];
  sum += weight * (scp * middle + pv.e_eta[pv.n - 1]);
  return sum;
}

/// Plain sum of the eta-th powers.
inline double trivial_sum_bound(const EntanglementVector& ev, double eta) {
  double sum = 0.0;
  for (double e : ev.pairwise) sum += pow_real(e, eta);
  return sum;
}

/// Every applicable bound evaluated on one vector, with per-bound
/// applicability recorded (a value is present iff its condition held).
struct BoundReport {
  std::optional<double> thm1, thm2, thm3, thm4, thm5;
  std::optional<double> baseline_lemma1, baseline_simple;
  double trivial_sum = 0.0;
  std::optional<std::size_t> partition;
  std::optional<double> total_power;  // E^eta across the full cut, when known
  std::vector<std::string> warnings;
};

inline BoundReport compare_bounds(const EntanglementVector& ev, const BoundParams& p) {
  BoundReport report;
  auto attempt = [&report](std::optional<double>& slot, auto&& fn) {
    try {
      slot = fn();
    } catch (const Error& err) {
      report.warnings.emplace_back(err.what());
    }
  };

  const std::size_t n = ev.pairwise.size();
  if (n == 2) {
    attempt(report.thm3, [&] { return thm3_bound(ev.pairwise[0], ev.pairwise[1], p); });
  }
  if (n >= 3) {
    attempt(report.thm1, [&] { return thm1_bound(ev, p); });
    attempt(report.thm4, [&] { return thm4_bound(ev, p); });
    try {
      if (p.gamma_prime) report.partition = partition_m(ev, p.gamma, *p.gamma_prime);
    } catch (const Error&) {
    }
  }
  attempt(report.thm2, [&] { return thm2_bound(ev, p); });
  attempt(report.thm5, [&] { return thm5_bound(ev, p); });
  attempt(report.baseline_lemma1, [&] { return baseline_lemma1_bound(ev, p); });
  attempt(report.baseline_simple, [&] { return baseline_simple_bound(ev, p); });
  report.trivial_sum = trivial_sum_bound(ev, p.eta);
  if (ev.total) report.total_power = pow_real(*ev.total, p.eta);
  return report;
}

}  // namespace monobound
