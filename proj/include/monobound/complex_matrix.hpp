#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "monobound/errors.hpp"
#include "monobound/tolerances.hpp"

namespace monobound {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) r.entries_[i] = std::conj(entries_[i]);
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  double max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw LengthMismatch("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < dim_ * dim_; ++i)
      m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    return m;
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw LengthMismatch("operator+: dimension mismatch");
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] + rhs.entries_[i];
    return r;
  }

  ComplexMatrix operator-(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw LengthMismatch("operator-: dimension mismatch");
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] - rhs.entries_[i];
    return r;
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw LengthMismatch("operator*: dimension mismatch");
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Complex a = (*this)(i, k);
        if (a == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < dim_; ++j) r(i, j) += a * rhs(k, j);
      }
    }
    return r;
  }

  ComplexMatrix scaled(Complex factor) const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) r.entries_[i] = factor * entries_[i];
    return r;
  }

  bool is_hermitian(double tolerance = tol::hermitian) const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) return false;
    return true;
  }

  bool is_psd(double tolerance = tol::psd) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker product: entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j)*b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix r(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) r(i * db + k, j * db + l) = aij * b(k, l);
    }
  return r;
}

/// Eigenvalues sorted descending with matching orthonormal eigenvector columns.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Sweeps run until the off-diagonal Frobenius norm falls below
/// tol::eig_offdiag relative to max(1, ||A||_F).
inline HermitianSpectrum herm_eig(const ComplexMatrix& m) {
  if (!m.is_hermitian()) throw NotHermitian("herm_eig: input is not Hermitian");

  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = tol::eig_offdiag * std::max(1.0, m.frobenius_norm());

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < tol::eig_max_sweeps && off_norm() > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;

        // Phase that makes the (p,q) entry real, then a real Jacobi rotation.
        const Complex phase = apq / r;  // e^{i theta}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Plane unitary G: G(p,p)=c, G(p,q)=s, G(q,p)=-s*conj(phase), G(q,q)=c*conj(phase).
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        // Columns p and q of A and V: M <- M * G.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip + gqp * aiq;
          a(i, q) = s * aip + gqq * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip + gqp * viq;
          v(i, q) = s * vip + gqq * viq;
        }
        // Rows p and q of A: A <- G^dag * A.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + std::conj(gqp) * aqj;
          a(q, j) = s * apj + std::conj(gqq) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  HermitianSpectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    spec.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, j) = v(i, order[j]);
  }
  return spec;
}

inline bool ComplexMatrix::is_psd(double tolerance) const {
  if (!is_hermitian()) return false;
  const HermitianSpectrum spec = herm_eig(*this);
  return spec.eigenvalues.empty() || spec.eigenvalues.back() >= -tolerance;
}

/// PSD square root of a Hermitian PSD matrix.
///
/// Eigenvalues in [-tol::eig_clamp, 0) are clamped to 0 and anything lower is
/// rejected as NotPSD. Positive dust below tol::eig_dust (relative to the
/// largest eigenvalue) is clamped too, so exactly singular inputs keep an
/// exactly singular square root.
inline ComplexMatrix herm_sqrt(const ComplexMatrix& m) {
  if (!m.is_hermitian()) throw NotHermitian("herm_sqrt: input is not Hermitian");
  HermitianSpectrum spec = herm_eig(m);
  const double dust =
      tol::eig_dust * std::max(1.0, spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.front());
  for (double& ev : spec.eigenvalues) {
    if (ev < -tol::eig_clamp) throw NotPSD("herm_sqrt: negative eigenvalue " + std::to_string(ev));
    if (ev < dust) ev = 0.0;
  }
  const std::size_t n = m.dim();
  ComplexMatrix r(n);
  const ComplexMatrix& v = spec.eigenvectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += v(i, k) * std::sqrt(spec.eigenvalues[k]) * std::conj(v(j, k));
      r(i, j) = sum;
    }
  return r;
}

}  // namespace monobound
