#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "monobound/complex_matrix.hpp"
#include "monobound/rng.hpp"

using namespace monobound;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m(0, 1) = Complex{0.0, -1.0};
  m(1, 0) = Complex{0.0, 1.0};
  return m;
}

ComplexMatrix random_hermitian(SeededRng& rng, std::size_t dim) {
  ComplexMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = rng.complex_gaussian();
  return (a + a.adjoint()).scaled(0.5);
}

}  // namespace

TEST_CASE("kron identity case") {
  const ComplexMatrix r = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  REQUIRE(r.max_abs_diff(ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron of the two-qubit spin-flip factor") {
  const ComplexMatrix r = kron(pauli_y(), pauli_y());
  ComplexMatrix expected(4);
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  REQUIRE(r.max_abs_diff(expected) == 0.0);
}

TEST_CASE("kron diagonal case") {
  const ComplexMatrix r = kron(diag2(1, 2), diag2(3, 4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double expected = i == j ? std::array{3.0, 4.0, 6.0, 8.0}[i] : 0.0;
      REQUIRE(r(i, j) == Complex{expected, 0.0});
    }
}

TEST_CASE("kron is associative on integer matrices") {
  SeededRng rng(7);
  ComplexMatrix a(2), b(2), c(3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = std::floor(rng.uniform(-4.0, 5.0));
      b(i, j) = std::floor(rng.uniform(-4.0, 5.0));
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = std::floor(rng.uniform(-4.0, 5.0));
  REQUIRE(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) == 0.0);
}

TEST_CASE("herm_eig on fixed spectra") {
  const HermitianSpectrum id = herm_eig(ComplexMatrix::identity(2));
  REQUIRE(id.eigenvalues[0] == Catch::Approx(1.0).margin(1e-14));
  REQUIRE(id.eigenvalues[1] == Catch::Approx(1.0).margin(1e-14));

  const HermitianSpectrum sx = herm_eig(pauli_x());
  REQUIRE(sx.eigenvalues[0] == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(sx.eigenvalues[1] == Catch::Approx(-1.0).margin(1e-12));

  const HermitianSpectrum d = herm_eig(diag2(1.0 / 3.0, 2.0 / 3.0));
  REQUIRE(d.eigenvalues[0] == Catch::Approx(2.0 / 3.0).margin(1e-14));
  REQUIRE(d.eigenvalues[1] == Catch::Approx(1.0 / 3.0).margin(1e-14));
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;  // m(1,0) stays 0
  REQUIRE_THROWS_AS(herm_eig(m), NotHermitian);
}

TEST_CASE("herm_eig reconstruction and orthonormality on random input") {
  SeededRng rng(42);
  for (std::size_t dim : {2, 3, 4, 8, 16}) {
    const ComplexMatrix m = random_hermitian(rng, dim);
    const HermitianSpectrum spec = herm_eig(m);

    for (std::size_t i = 0; i + 1 < dim; ++i)
      REQUIRE(spec.eigenvalues[i] >= spec.eigenvalues[i + 1]);

    ComplexMatrix rebuilt(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < dim; ++k)
          sum += spec.eigenvectors(i, k) * spec.eigenvalues[k] *
                 std::conj(spec.eigenvectors(j, k));
        rebuilt(i, j) = sum;
      }
    REQUIRE(rebuilt.max_abs_diff(m) <= 1e-10);

    const ComplexMatrix gram = spec.eigenvectors.adjoint() * spec.eigenvectors;
    REQUIRE(gram.max_abs_diff(ComplexMatrix::identity(dim)) <= 1e-10);
  }
}

TEST_CASE("herm_sqrt on fixed inputs") {
  const ComplexMatrix r = herm_sqrt(diag2(4.0, 9.0));
  REQUIRE(r.max_abs_diff(diag2(2.0, 3.0)) <= 1e-12);

  const ComplexMatrix id = herm_sqrt(ComplexMatrix::identity(4));
  REQUIRE(id.max_abs_diff(ComplexMatrix::identity(4)) <= 1e-12);
}

TEST_CASE("herm_sqrt of a rank-1 projector is the projector") {
  SeededRng rng(11);
  std::vector<Complex> v(4);
  double norm_sq = 0.0;
  for (Complex& z : v) {
    z = rng.complex_gaussian();
    norm_sq += std::norm(z);
  }
  ComplexMatrix p(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) p(i, j) = v[i] * std::conj(v[j]) / norm_sq;
  REQUIRE(herm_sqrt(p).max_abs_diff(p) <= 1e-10);
}

TEST_CASE("herm_sqrt squares back to the input on random PSD matrices") {
  SeededRng rng(123);
  for (std::size_t dim : {2, 4, 6}) {
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = rng.complex_gaussian();
    const ComplexMatrix psd = a.adjoint() * a;
    const ComplexMatrix root = herm_sqrt(psd);
    REQUIRE(root.is_hermitian(1e-10));
    REQUIRE(root.is_psd(1e-9));
    REQUIRE((root * root).max_abs_diff(psd) <= 1e-9);
  }
}

TEST_CASE("herm_sqrt error paths") {
  ComplexMatrix skew(2);
  skew(0, 1) = 1.0;
  REQUIRE_THROWS_AS(herm_sqrt(skew), NotHermitian);
  REQUIRE_THROWS_AS(herm_sqrt(diag2(1.0, -0.5)), NotPSD);
}
