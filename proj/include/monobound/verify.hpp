#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "monobound/bounds.hpp"
#include "monobound/concurrence.hpp"
#include "monobound/rng.hpp"
#include "monobound/states.hpp"

namespace monobound {

/// Outcome of one verification suite: counts plus the first failing tuple.
struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  template <typename DescribeFn>
  void check(bool ok, DescribeFn&& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = describe();
    }
  }

  bool passed() const { return failures == 0; }

  void absorb(const SuiteResult& other) {
    checks += other.checks;
    failures += other.failures;
    if (first_failure.empty()) first_failure = other.first_failure;
  }
};

// ---------------------------------------------------------------------------
// Seeded generators for conforming entanglement vectors. Values are kept
// small enough that eta-th powers stay O(10), so absolute tolerances near
// 1e-12 remain meaningful.
// ---------------------------------------------------------------------------

/// Three pairwise entries (a 4-party vector) satisfying the partition
/// conditions with m = 1: e1 >= gamma (e2 + e3) and gamma' e2 <= e3.
inline EntanglementVector random_partition_conforming_vector(SeededRng& rng, double gamma,
                                                             double gamma_prime) {
  EntanglementVector ev;
  const double e3 = rng.uniform(0.05, 0.4);
  const double e2 = rng.uniform01() * e3 / gamma_prime;
  const double e1 = gamma * (e2 + e3) * (1.0 + 0.3 * rng.uniform01());
  ev.pairwise = {e1, e2, e3};
  return ev;
}

/// n pairwise entries with e_i >= gamma * (sum of later entries) for every i.
inline EntanglementVector random_strong_conforming_vector(SeededRng& rng, double gamma,
                                                          std::size_t n) {
  std::vector<double> e(n);
  e[n - 1] = rng.uniform(0.02, 0.2);
  double tail = e[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    e[i] = gamma * tail * (1.0 + 0.2 * rng.uniform01());
    tail += e[i];
  }
  EntanglementVector ev;
  ev.pairwise = std::move(e);
  return ev;
}

/// A pair (e1, e2) meeting one of the two tripartite case conditions.
inline EntanglementVector random_case_conforming_pair(SeededRng& rng, double gamma) {
  const double small = rng.uniform(0.0, 0.6);
  const double big = gamma * small * (1.0 + rng.uniform01()) + rng.uniform(0.0, 0.1);
  EntanglementVector ev;
  ev.pairwise = rng.uniform01() < 0.5 ? std::vector<double>{big, small}
                                      : std::vector<double>{small, big};
  return ev;
}

// ---------------------------------------------------------------------------
// Printed k = k' = 1 specializations, transcribed term by term with
// std::pow. These are reference formulas, independent of the general
// evaluators they are checked against.
// ---------------------------------------------------------------------------

namespace k1 {

inline double partition_display_a(const std::vector<double>& e, double alpha, double mu,
                                  std::size_t m) {
  const double eta = alpha * mu;
  const double coeff = std::pow(2.0, mu) - mu / 2.0 - 1.0;
  const std::size_t n = e.size();
  double sum = 0.0, weight = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    double tail = 0.0;
    for (std::size_t l = i + 1; l < n; ++l) tail += std::pow(e[l], alpha);
    sum += weight * (std::pow(e[i], eta) + mu / 2.0 * std::pow(e[i], eta - alpha) * tail);
    weight *= coeff;
  }
  double middle = 0.0;
  for (std::size_t j = m; j + 3 <= n; ++j) middle += std::pow(e[j], eta);
  sum += weight * (std::pow(2.0, mu) - 1.0) * middle;
  sum += weight * (coeff * std::pow(e[n - 2], eta) +
                   mu / 2.0 * std::pow(e[n - 2], alpha) * std::pow(e[n - 1], eta - alpha) +
                   std::pow(e[n - 1], eta));
  return sum;
}

inline double partition_display_b(const std::vector<double>& e, double alpha, double mu,
                                  std::size_t m) {
  const double eta = alpha * mu;
  const double coeff = std::pow(2.0, mu) - mu - 1.0;
  const std::size_t n = e.size();
  double sum = 0.0, weight = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    double tail = 0.0;
    for (std::size_t l = i + 1; l < n; ++l) tail += std::pow(e[l], alpha);
    sum += weight * (std::pow(e[i], eta) + mu * std::pow(e[i], eta - alpha) * tail);
    weight *= coeff;
  }
  double middle = 0.0;
  for (std::size_t j = m; j + 3 <= n; ++j) middle += std::pow(e[j], eta);
  sum += weight * (std::pow(2.0, mu) - 1.0) * middle;
  sum += weight * (coeff * std::pow(e[n - 2], eta) +
                   mu * std::pow(e[n - 2], alpha) * std::pow(e[n - 1], eta - alpha) +
                   std::pow(e[n - 1], eta));
  return sum;
}

inline double strong_display_a(const std::vector<double>& e, double alpha, double mu) {
  const double eta = alpha * mu;
  const double coeff = std::pow(2.0, mu) - mu / 2.0 - 1.0;
  const std::size_t n = e.size();
  double sum = 0.0, weight = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double tail = 0.0;
    for (std::size_t l = i + 1; l < n; ++l) tail += std::pow(e[l], alpha);
    sum += weight * (std::pow(e[i], eta) + mu / 2.0 * std::pow(e[i], eta - alpha) * tail);
    weight *= coeff;
  }
  return sum + weight * std::pow(e[n - 1], eta);
}

inline double strong_display_b(const std::vector<double>& e, double alpha, double mu) {
  const double eta = alpha * mu;
  const double coeff = std::pow(2.0, mu) - mu - 1.0;
  const std::size_t n = e.size();
  double sum = 0.0, weight = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double tail = 0.0;
    for (std::size_t l = i + 1; l < n; ++l) tail += std::pow(e[l], alpha);
    sum += weight * (std::pow(e[i], eta) + mu * std::pow(e[i], eta - alpha) * tail);
    weight *= coeff;
  }
  return sum + weight * std::pow(e[n - 1], eta);
}

inline double pair_display_b(double big, double small, double alpha, double mu) {
  const double eta = alpha * mu;
  return std::pow(big, eta) + mu * std::pow(big, eta - alpha) * std::pow(small, alpha) +
         (std::pow(2.0, mu) - mu - 1.0) * std::pow(small, eta);
}

}  // namespace k1

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

namespace detail {

template <typename... Args>
inline std::string describe_tuple(Args... args) {
  std::ostringstream os;
  os.precision(17);
  ((os << args << ' '), ...);
  return os.str();
}

}  // namespace detail

/// Sampled checks of the scalar inequalities: the (1+x)^mu chains, the
/// endpoint equalities, the closed-form gap identity and k-monotonicity.
inline SuiteResult verify_lemmas(std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "lemmas";
  SeededRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const double k = rng.uniform(1.0, 5.0);
    const double mu1 = rng.uniform(1.0, 6.0);   // mu >= 1 family
    const double mu2 = rng.uniform(2.0, 6.0);   // mu >= 2 family
    const double u = rng.uniform01();
    const double x = u / k;
    const double lhs1 = std::pow(1.0 + x, mu1);
    const double l1 = lemma1_rhs(x, k, mu1);
    const double bs = baseline_simple_rhs(x, k, mu1);

    r.check(lhs1 >= l1 - tol::inequality, [&] {
      return "lemma1 violated at " + detail::describe_tuple(x, k, mu1);
    });
    r.check(l1 >= bs - tol::inequality, [&] {
      return "lemma1 >= baseline_simple violated at " + detail::describe_tuple(x, k, mu1);
    });
    r.check(bs >= 1.0 - tol::inequality, [&] {
      return "baseline_simple >= 1 violated at " + detail::describe_tuple(x, k, mu1);
    });
    r.check(lemma2_check(rng.uniform(0.0, 5.0), mu1), [&] {
      return "lemma2 violated at mu=" + detail::describe_tuple(mu1);
    });
    const double x3 = rng.uniform01();
    r.check(std::pow(1.0 + x3, mu2) >= lemma3_rhs(x3, mu2) - tol::inequality, [&] {
      return "lemma3 violated at " + detail::describe_tuple(x3, mu2);
    });
    const double lhs2 = std::pow(1.0 + x, mu2);
    const double l4 = lemma4_rhs(x, k, mu2);
    r.check(lhs2 >= l4 - tol::inequality, [&] {
      return "lemma4 violated at " + detail::describe_tuple(x, k, mu2);
    });

    // lemma3 is lemma4 at k = 1.
    r.check(std::abs(lemma3_rhs(x3, mu2) - lemma4_rhs(x3, 1.0, mu2)) <= 1e-12, [&] {
      return "lemma3 != lemma4(k=1) at " + detail::describe_tuple(x3, mu2);
    });

    // Closed-form gap between the two three-term bounds:
    // lemma4 - lemma1 = (mu/(k+1)) x (1 - (kx)^(mu-1)) >= 0.
    const double gap = lemma4_rhs(x, k, mu2) - lemma1_rhs(x, k, mu2);
    const double gap_closed = mu2 / (k + 1.0) * x * (1.0 - std::pow(k * x, mu2 - 1.0));
    r.check(std::abs(gap - gap_closed) <= 1e-10, [&] {
      return "gap identity violated at " + detail::describe_tuple(x, k, mu2, gap, gap_closed);
    });
    r.check(gap >= -tol::inequality, [&] {
      return "lemma4 >= lemma1 violated at " + detail::describe_tuple(x, k, mu2);
    });

    // Larger k tightens lemma1 on the shared domain x <= 1/k2.
    const double k2 = rng.uniform(k, 5.0);
    const double xs = u / k2;
    r.check(lemma1_rhs(xs, k2, mu1) >= lemma1_rhs(xs, k, mu1) - tol::inequality, [&] {
      return "lemma1 k-monotonicity violated at " + detail::describe_tuple(xs, k, k2, mu1);
    });

    // Equality witnesses at both endpoints of the domain.
    if (s % 97 == 0) {
      r.check(std::abs(lemma1_rhs(0.0, k, mu1) - 1.0) <= 1e-12 &&
                  std::abs(lemma4_rhs(0.0, k, mu2) - 1.0) <= 1e-12 &&
                  std::abs(baseline_simple_rhs(0.0, k, mu1) - 1.0) <= 1e-12,
              [&] { return "x=0 equality violated at " + detail::describe_tuple(k, mu1, mu2); });
      const double xe = 1.0 / k;
      const double lhs_e1 = std::pow(1.0 + xe, mu1);
      const double lhs_e2 = std::pow(1.0 + xe, mu2);
      r.check(std::abs(lemma1_rhs(xe, k, mu1) - lhs_e1) <= 1e-12 &&
                  std::abs(baseline_simple_rhs(xe, k, mu1) - lhs_e1) <= 1e-12 &&
                  std::abs(lemma4_rhs(xe, k, mu2) - lhs_e2) <= 1e-12,
              [&] { return "x=1/k equality violated at " + detail::describe_tuple(k, mu1, mu2); });
    }
  }
  return r;
}

/// Ordering chains of the assembled bounds on conforming vectors, plus the
/// k = 1 printed-display agreement.
inline SuiteResult verify_orderings(std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "orderings";
  SeededRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const double gamma = rng.uniform(1.0, 1.25);
    const double gamma_prime = rng.uniform(1.0, 1.25);
    const double mu = rng.uniform(2.0, 4.0);
    const BoundParams p = BoundParams::from_gamma(2.0, 2.0 * mu, gamma, gamma_prime);

    {  // 4-party partition chain
      const EntanglementVector ev = random_partition_conforming_vector(rng, gamma, gamma_prime);
      const double t1 = thm1_bound(ev, p);
      const double t4 = thm4_bound(ev, p);
      const double bl = baseline_lemma1_bound(ev, p);
      const double bs = baseline_simple_bound(ev, p);
      const double tr = trivial_sum_bound(ev, p.eta);
      auto desc = [&] {
        return "partition chain violated at " +
               detail::describe_tuple(ev.pairwise[0], ev.pairwise[1], ev.pairwise[2], mu,
                                      gamma, gamma_prime, t4, t1, bl, bs, tr);
      };
      r.check(t4 >= t1 - tol::inequality, desc);
      r.check(t1 >= bl - tol::inequality, desc);
      r.check(bl >= bs - tol::inequality, desc);
      r.check(bs >= tr - tol::inequality, desc);
    }
    {  // strong-condition chain
      const EntanglementVector ev = random_strong_conforming_vector(rng, gamma, 3);
      const double t2 = thm2_bound(ev, p);
      const double t5 = thm5_bound(ev, p);
      r.check(t5 >= t2 - tol::inequality, [&] {
        return "thm5 >= thm2 violated at " +
               detail::describe_tuple(ev.pairwise[0], ev.pairwise[1], ev.pairwise[2], mu, gamma);
      });
    }
    {  // tripartite chain
      const EntanglementVector ev = random_case_conforming_pair(rng, gamma);
      const double t3 = thm3_bound(ev.pairwise[0], ev.pairwise[1], p);
      const double bl = baseline_lemma1_bound(ev, p);
      const double bs = baseline_simple_bound(ev, p);
      const double tr = trivial_sum_bound(ev, p.eta);
      auto desc = [&] {
        return "tripartite chain violated at " +
               detail::describe_tuple(ev.pairwise[0], ev.pairwise[1], mu, gamma, t3, bl, bs, tr);
      };
      r.check(t3 >= bl - tol::inequality, desc);
      r.check(bl >= bs - tol::inequality, desc);
      r.check(bs >= tr - tol::inequality, desc);
    }
    {  // k = k' = 1 display agreement
      const BoundParams p1 = BoundParams::from_gamma(2.0, 2.0 * mu, 1.0, 1.0);
      const EntanglementVector ev4 = random_partition_conforming_vector(rng, 1.0, 1.0);
      const std::size_t m = partition_m(ev4, 1.0, 1.0);
      r.check(std::abs(thm1_bound(ev4, p1) -
                       k1::partition_display_a(ev4.pairwise, 2.0, mu, m)) <= 1e-12,
              [&] { return "thm1 k=1 display mismatch"; });
      r.check(std::abs(thm4_bound(ev4, p1) -
                       k1::partition_display_b(ev4.pairwise, 2.0, mu, m)) <= 1e-12,
              [&] { return "thm4 k=1 display mismatch"; });
      const EntanglementVector evs = random_strong_conforming_vector(rng, 1.0, 4);
      r.check(std::abs(thm2_bound(evs, p1) - k1::strong_display_a(evs.pairwise, 2.0, mu)) <=
                  1e-12,
              [&] { return "thm2 k=1 display mismatch"; });
      r.check(std::abs(thm5_bound(evs, p1) - k1::strong_display_b(evs.pairwise, 2.0, mu)) <=
                  1e-12,
              [&] { return "thm5 k=1 display mismatch"; });
      const EntanglementVector evp = random_case_conforming_pair(rng, 1.0);
      const double big = std::max(evp.pairwise[0], evp.pairwise[1]);
      const double small = std::min(evp.pairwise[0], evp.pairwise[1]);
      r.check(std::abs(thm3_bound(evp.pairwise[0], evp.pairwise[1], p1) -
                       k1::pair_display_b(big, small, 2.0, mu)) <= 1e-12,
              [&] { return "thm3 k=1 display mismatch"; });
    }
  }
  return r;
}

/// Squared-concurrence monogamy on Haar-random 3-qubit pure states, bound
/// soundness against the state value, and the fixed two-qubit cross-checks.
inline SuiteResult verify_ckw(std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "ckw";
  for (std::size_t s = 0; s < samples; ++s) {
    const PureState psi = haar_random_pure(3, seed + s);
    const EntanglementVector ev = concurrence_vector(psi, 0);
    const double total = *ev.total;
    const double e1 = ev.pairwise[0];
    const double e2 = ev.pairwise[1];
    r.check(total * total >= e1 * e1 + e2 * e2 - 1e-9, [&] {
      return "monogamy violated at seed " + detail::describe_tuple(seed + s, total, e1, e2);
    });

    // Bound soundness whenever a case condition holds with gamma = sqrt(2).
    const double gamma = std::sqrt(2.0);
    if (e1 >= gamma * e2 || gamma * e1 <= e2) {
      for (double eta : {4.0, 6.0, 8.0}) {
        const BoundParams p = BoundParams::from_k(2.0, eta, 2.0);
        const double bound = thm3_bound(e1, e2, p);
        r.check(pow_real(total, eta) >= bound - 1e-9, [&] {
          return "thm3 unsound at seed " + detail::describe_tuple(seed + s, eta, total, e1, e2);
        });
      }
    }
  }

  // Two-qubit consistency: the analytic formula agrees with the pure-state
  // formula, and is invariant under local unitaries.
  SeededRng rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::size_t pair_samples = std::max<std::size_t>(samples / 10, 10);
  for (std::size_t s = 0; s < pair_samples; ++s) {
    const PureState psi = haar_random_pure(2, seed + 1000003 + s);
    const DensityMatrix rho = density_of(psi);
    const double pure = pure_concurrence(psi, make_split(2, {0}));
    const double mixed = wootters_concurrence(rho);
    r.check(std::abs(pure - mixed) <= 1e-10, [&] {
      return "pure/analytic mismatch at seed " +
             detail::describe_tuple(seed + 1000003 + s, pure, mixed);
    });

    auto random_unitary = [&rng]() {
      Complex a = rng.complex_gaussian(), b = rng.complex_gaussian();
      const double norm = std::sqrt(std::norm(a) + std::norm(b));
      a /= norm;
      b /= norm;
      const double phase = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
      const Complex ph{std::cos(phase), std::sin(phase)};
      ComplexMatrix u(2);
      u(0, 0) = a;
      u(1, 0) = b;
      u(0, 1) = -std::conj(b) * ph;
      u(1, 1) = std::conj(a) * ph;
      return u;
    };
    const ComplexMatrix u = kron(random_unitary(), random_unitary());
    const ComplexMatrix rotated = u * rho.matrix * u.adjoint();
    const double after = wootters_concurrence(DensityMatrix{{2, 2}, rotated});
    r.check(std::abs(after - mixed) <= 1e-9, [&] {
      return "local-unitary invariance violated at " + detail::describe_tuple(mixed, after);
    });
  }

  // Werner family closed form: max(0, (3p-1)/2).
  for (double p : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
    ComplexMatrix m = ComplexMatrix::identity(4).scaled((1.0 - p) / 4.0);
    const std::size_t corners[2] = {0, 3};
    for (std::size_t i : corners)
      for (std::size_t j : corners) m(i, j) += p * 0.5;
    const double c = wootters_concurrence(DensityMatrix{{2, 2}, m});
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    r.check(std::abs(c - expected) <= 1e-10,
            [&] { return "Werner concurrence mismatch at p = " + detail::describe_tuple(p); });
  }
  return r;
}

/// State-construction invariants: partial-trace composition and trace
/// preservation, projector rank, coefficient placement, determinism and the
/// reduced-purity mean of Haar samples.
inline SuiteResult verify_states(std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "states";
  SeededRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = 3 + s % 2;  // 3- and 4-qubit states
    const PureState psi = haar_random_pure(n, seed + 7919 * s);
    const DensityMatrix rho = density_of(psi);

    // Rank 1: second-largest eigenvalue of a projector is 0.
    const HermitianSpectrum spec = herm_eig(rho.matrix);
    r.check(spec.eigenvalues[1] <= 1e-10,
            [&] { return "density_of not rank 1 at seed " + detail::describe_tuple(seed + s); });

    // Discarding {a} then {b} equals discarding {a, b}; traces stay 1.
    const std::size_t a = rng.uniform_index(n);
    std::size_t b = rng.uniform_index(n - 1);
    if (b >= a) ++b;
    const DensityMatrix once = partial_trace(rho, {a});
    const std::size_t b_shifted = b > a ? b - 1 : b;
    const DensityMatrix twice = partial_trace(once, {b_shifted});
    const DensityMatrix direct = partial_trace(rho, {a, b});
    r.check(twice.matrix.max_abs_diff(direct.matrix) <= 1e-12, [&] {
      return "partial trace composition violated at " + detail::describe_tuple(seed + s, a, b);
    });
    r.check(std::abs(direct.matrix.trace().real() - 1.0) <= tol::trace &&
                std::abs(once.matrix.trace().real() - 1.0) <= tol::trace,
            [&] { return "partial trace does not preserve trace"; });

    // Coefficient placement of the three-qubit family is verbatim.
    if (s % 5 == 0) {
      double lam[5];
      double sum_sq = 0.0;
      for (double& v : lam) {
        v = rng.uniform01();
        sum_sq += v * v;
      }
      for (double& v : lam) v /= std::sqrt(sum_sq);
      const double phi = rng.uniform(0.0, 3.14159265358979323846);
      const PureState acin = acin_state(lam[0], lam[1], lam[2], lam[3], lam[4], phi);
      const Complex expected1 = lam[1] * Complex{std::cos(phi), std::sin(phi)};
      const bool placed = acin.amplitudes[0] == Complex{lam[0], 0.0} &&
                          acin.amplitudes[4] == expected1 &&
                          acin.amplitudes[5] == Complex{lam[2], 0.0} &&
                          acin.amplitudes[6] == Complex{lam[3], 0.0} &&
                          acin.amplitudes[7] == Complex{lam[4], 0.0} &&
                          acin.amplitudes[1] == Complex{0.0, 0.0} &&
                          acin.amplitudes[2] == Complex{0.0, 0.0} &&
                          acin.amplitudes[3] == Complex{0.0, 0.0};
      r.check(placed, [&] { return "acin_state placement not verbatim"; });
    }
  }

  // Determinism: identical seed gives bit-identical amplitudes.
  {
    const PureState s1 = haar_random_pure(3, seed + 42);
    const PureState s2 = haar_random_pure(3, seed + 42);
    r.check(s1.amplitudes == s2.amplitudes, [&] { return "haar_random_pure not deterministic"; });
  }

  // Mean reduced purity of 1000 Haar two-qubit states is 4/5 (within a
  // +-0.02 band calibrated for 1000 samples).
  {
    double mean = 0.0;
    const std::size_t purity_samples = 1000;
    for (std::size_t s = 0; s < purity_samples; ++s) {
      const PureState psi = haar_random_pure(2, seed + 500000 + s);
      const DensityMatrix red = partial_trace(density_of(psi), {1});
      double purity = 0.0;
      for (const Complex& z : red.matrix.entries()) purity += std::norm(z);
      mean += purity;
    }
    mean /= static_cast<double>(purity_samples);
    r.check(mean >= 0.78 && mean <= 0.82,
            [&] { return "Haar purity mean out of band: " + detail::describe_tuple(mean); });
  }
  return r;
}

inline SuiteResult verify_suite(const std::string& name, std::size_t samples,
                                std::uint64_t seed) {
  if (name == "lemmas") return verify_lemmas(samples, seed);
  if (name == "orderings") return verify_orderings(samples, seed);
  if (name == "ckw") return verify_ckw(samples, seed);
  if (name == "states") return verify_states(samples, seed);
  if (name == "all") {
    SuiteResult all;
    all.suite = "all";
    all.absorb(verify_lemmas(samples, seed));
    all.absorb(verify_orderings(std::max<std::size_t>(samples / 10, 1), seed + 1));
    all.absorb(verify_ckw(std::max<std::size_t>(samples / 100, 10), seed + 2));
    all.absorb(verify_states(std::max<std::size_t>(samples / 100, 10), seed + 3));
    return all;
  }
  throw UnknownSuite("verify: unknown suite '" + name + "'");
}

}  // namespace monobound
