#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "monobound/states.hpp"

using namespace monobound;

namespace {

PureState example1_state() {
  return acin_state(std::sqrt(3.0) / 3.0, 0.0, std::sqrt(6.0) / 6.0, std::sqrt(2.0) / 2.0,
                    0.0, 0.0);
}

}  // namespace

TEST_CASE("make_pure renormalizes and records the factor") {
  const PureState bell = make_pure({1.0, 0.0, 0.0, 1.0}, {2, 2});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  REQUIRE(bell.amplitudes[0].real() == Catch::Approx(inv_sqrt2).margin(1e-15));
  REQUIRE(bell.amplitudes[3].real() == Catch::Approx(inv_sqrt2).margin(1e-15));
  REQUIRE(bell.norm_factor == Catch::Approx(inv_sqrt2).margin(1e-15));

  const PureState zero = make_pure({1.0, 0.0}, {2});
  REQUIRE(zero.amplitudes[0] == Complex{1.0, 0.0});

  const PureState uniform = make_pure(std::vector<Complex>(8, 1.0), {2, 2, 2});
  REQUIRE(uniform.norm_factor == Catch::Approx(1.0 / std::sqrt(8.0)).margin(1e-15));
  double norm_sq = 0.0;
  for (const Complex& z : uniform.amplitudes) norm_sq += std::norm(z);
  REQUIRE(norm_sq == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("make_pure error paths") {
  REQUIRE_THROWS_AS(make_pure({0.0, 0.0}, {2}), ZeroVector);
  REQUIRE_THROWS_AS(make_pure({1.0, 0.0, 0.0}, {2, 2}), LengthMismatch);
}

TEST_CASE("density_of basic projectors") {
  const DensityMatrix zero = density_of(make_pure({1.0, 0.0}, {2}));
  REQUIRE(zero.matrix(0, 0) == Complex{1.0, 0.0});
  REQUIRE(zero.matrix(1, 1) == Complex{0.0, 0.0});

  const DensityMatrix one = density_of(make_pure({0.0, 1.0}, {2}));
  REQUIRE(one.matrix(0, 0) == Complex{0.0, 0.0});
  REQUIRE(one.matrix(1, 1) == Complex{1.0, 0.0});

  const DensityMatrix bell = density_of(make_pure({1.0, 0.0, 0.0, 1.0}, {2, 2}));
  for (std::size_t i : {0, 3})
    for (std::size_t j : {0, 3})
      REQUIRE(bell.matrix(i, j).real() == Catch::Approx(0.5).margin(1e-15));
  REQUIRE(std::abs(bell.matrix(1, 1)) == 0.0);
  REQUIRE(std::abs(bell.matrix(0, 1)) == 0.0);
  REQUIRE(bell.matrix.trace().real() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("partial_trace of the Bell pair is maximally mixed") {
  const DensityMatrix bell = density_of(make_pure({1.0, 0.0, 0.0, 1.0}, {2, 2}));
  const DensityMatrix reduced = partial_trace(bell, {1});
  REQUIRE(reduced.subsystem_dims == std::vector<std::size_t>{2});
  REQUIRE(reduced.matrix.max_abs_diff(ComplexMatrix::identity(2).scaled(0.5)) <= 1e-15);
}

TEST_CASE("partial_trace of a product state recovers the factor") {
  ComplexMatrix tau(2);
  tau(0, 0) = 0.7;
  tau(1, 1) = 0.3;
  tau(0, 1) = Complex{0.2, 0.1};
  tau(1, 0) = Complex{0.2, -0.1};
  ComplexMatrix vac(2);
  vac(0, 0) = 1.0;
  const DensityMatrix product{{2, 2}, kron(tau, vac)};
  const DensityMatrix reduced = partial_trace(product, {1});
  REQUIRE(reduced.matrix.max_abs_diff(tau) <= 1e-15);
}

TEST_CASE("partial_trace of the first example state onto qubit A") {
  // Hand partial trace of the amplitudes: diag(1/3, 2/3).
  const DensityMatrix rho = density_of(example1_state());
  const DensityMatrix a = partial_trace(rho, {1, 2});
  REQUIRE(a.matrix(0, 0).real() == Catch::Approx(1.0 / 3.0).margin(1e-12));
  REQUIRE(a.matrix(1, 1).real() == Catch::Approx(2.0 / 3.0).margin(1e-12));
  REQUIRE(std::abs(a.matrix(0, 1)) <= 1e-15);
  REQUIRE(a.matrix.trace().real() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("partial_trace composes and preserves the trace") {
  const PureState psi = haar_random_pure(3, 777);
  const DensityMatrix rho = density_of(psi);
  const DensityMatrix once = partial_trace(rho, {1});
  // After discarding original index 1, original index 2 sits at position 1.
  const DensityMatrix twice = partial_trace(once, {1});
  const DensityMatrix direct = partial_trace(rho, {1, 2});
  REQUIRE(twice.matrix.max_abs_diff(direct.matrix) <= 1e-12);
  REQUIRE(direct.matrix.trace().real() == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("partial_trace rejects bad subsets") {
  const DensityMatrix bell = density_of(make_pure({1.0, 0.0, 0.0, 1.0}, {2, 2}));
  REQUIRE_THROWS_AS(partial_trace(bell, {}), BadSubset);
  REQUIRE_THROWS_AS(partial_trace(bell, {0, 1}), BadSubset);
  REQUIRE_THROWS_AS(partial_trace(bell, {2}), BadSubset);
}

TEST_CASE("acin_state places coefficients verbatim") {
  const double l0 = std::sqrt(3.0) / 3.0, l2 = std::sqrt(6.0) / 6.0, l3 = std::sqrt(2.0) / 2.0;
  const PureState psi = acin_state(l0, 0.0, l2, l3, 0.0, 0.0);
  REQUIRE(psi.amplitudes[0] == Complex{l0, 0.0});
  REQUIRE(psi.amplitudes[4] == Complex{0.0, 0.0});
  REQUIRE(psi.amplitudes[5] == Complex{l2, 0.0});
  REQUIRE(psi.amplitudes[6] == Complex{l3, 0.0});
  REQUIRE(psi.amplitudes[7] == Complex{0.0, 0.0});
  for (std::size_t i : {1, 2, 3}) REQUIRE(psi.amplitudes[i] == Complex{0.0, 0.0});

  const PureState vacuum = acin_state(1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
  REQUIRE(vacuum.amplitudes[0] == Complex{1.0, 0.0});
  for (std::size_t i = 1; i < 8; ++i) REQUIRE(vacuum.amplitudes[i] == Complex{0.0, 0.0});
}

TEST_CASE("acin_state phase lands on the |100> amplitude") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const PureState psi = acin_state(inv_sqrt2, inv_sqrt2, 0.0, 0.0, 0.0, 1.25);
  REQUIRE(psi.amplitudes[4].real() == Catch::Approx(inv_sqrt2 * std::cos(1.25)).margin(1e-15));
  REQUIRE(psi.amplitudes[4].imag() == Catch::Approx(inv_sqrt2 * std::sin(1.25)).margin(1e-15));
}

TEST_CASE("acin_state error paths") {
  REQUIRE_THROWS_AS(acin_state(1.0, 0.5, 0.0, 0.0, 0.0, 0.0), NotNormalized);
  REQUIRE_THROWS_AS(acin_state(-1.0, 0.0, 0.0, 0.0, 0.0, 0.0), NegativeCoefficient);
}

TEST_CASE("w_mixture endpoints and rank") {
  // p = 0 collapses to the vacuum projector.
  const DensityMatrix vac = w_mixture(std::sqrt(2.0) / 3.0, std::sqrt(6.0) / 3.0, 1.0 / 3.0, 0.0);
  REQUIRE(vac.matrix(0, 0) == Complex{1.0, 0.0});
  REQUIRE(vac.matrix.frobenius_norm() == Catch::Approx(1.0).margin(1e-14));

  // a = (1,0,0), p = 1 is the |100> projector.
  const DensityMatrix flip = w_mixture(1.0, 0.0, 0.0, 1.0);
  REQUIRE(flip.matrix(4, 4) == Complex{1.0, 0.0});
  REQUIRE(flip.matrix.frobenius_norm() == Catch::Approx(1.0).margin(1e-14));

  // The general mixture has rank at most 2.
  const DensityMatrix mix = w_mixture(std::sqrt(2.0) / 3.0, std::sqrt(6.0) / 3.0, 1.0 / 3.0, 0.75);
  const HermitianSpectrum spec = herm_eig(mix.matrix);
  REQUIRE(spec.eigenvalues[2] <= 1e-12);
  REQUIRE(mix.matrix.trace().real() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("w_mixture error paths") {
  REQUIRE_THROWS_AS(w_mixture(1.0, 1.0, 0.0, 0.5), NotNormalized);
  REQUIRE_THROWS_AS(w_mixture(1.0, 0.0, 0.0, 1.5), BadProbability);
  REQUIRE_THROWS_AS(w_mixture(1.0, 0.0, 0.0, -0.1), BadProbability);
  REQUIRE_THROWS_AS(w_mixture(-1.0, 0.0, 0.0, 0.5), NegativeCoefficient);
}

TEST_CASE("haar_random_pure is deterministic and normalized") {
  const PureState a = haar_random_pure(3, 42);
  const PureState b = haar_random_pure(3, 42);
  REQUIRE(a.amplitudes == b.amplitudes);

  const PureState single = haar_random_pure(1, 9001);
  double norm_sq = 0.0;
  for (const Complex& z : single.amplitudes) norm_sq += std::norm(z);
  REQUIRE(norm_sq == Catch::Approx(1.0).margin(1e-12));

  REQUIRE_THROWS_AS(haar_random_pure(7, 1), TooLarge);
  REQUIRE_THROWS_AS(haar_random_pure(0, 1), TooLarge);
}

TEST_CASE("haar_random_pure mean reduced purity matches the Haar value") {
  // Independent Monte Carlo puts E[Tr rho_A^2] for two qubits at 4/5; the
  // +-0.02 band is ~5 sigma for 1000 samples.
  double mean = 0.0;
  const std::size_t samples = 1000;
  for (std::size_t s = 0; s < samples; ++s) {
    const PureState psi = haar_random_pure(2, 31337 + s);
    const DensityMatrix red = partial_trace(density_of(psi), {1});
    double purity = 0.0;
    for (const Complex& z : red.matrix.entries()) purity += std::norm(z);
    mean += purity;
  }
  mean /= static_cast<double>(samples);
  REQUIRE(mean >= 0.78);
  REQUIRE(mean <= 0.82);
}

TEST_CASE("make_density validates physicality") {
  ComplexMatrix good(2);
  good(0, 0) = 0.5;
  good(1, 1) = 0.5;
  REQUIRE_NOTHROW(make_density(good, {2}));

  ComplexMatrix skew(2);
  skew(0, 0) = 0.5;
  skew(1, 1) = 0.5;
  skew(0, 1) = 0.3;
  REQUIRE_THROWS_AS(make_density(skew, {2}), NotHermitian);

  ComplexMatrix traceless(2);
  traceless(0, 0) = 0.5;
  traceless(1, 1) = 0.6;
  REQUIRE_THROWS_AS(make_density(traceless, {2}), NotNormalized);

  ComplexMatrix indefinite(2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  REQUIRE_THROWS_AS(make_density(indefinite, {2}), NotPSD);
}

TEST_CASE("make_split validates the focus set") {
  const BipartiteSplit s = make_split(3, {0});
  REQUIRE(s.focus == std::vector<std::size_t>{0});
  REQUIRE(s.rest == std::vector<std::size_t>{1, 2});
  REQUIRE_THROWS_AS(make_split(3, {}), BadSplit);
  REQUIRE_THROWS_AS(make_split(3, {0, 1, 2}), BadSplit);
  REQUIRE_THROWS_AS(make_split(3, {5}), BadSplit);
}
