#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "monobound/complex_matrix.hpp"
#include "monobound/errors.hpp"
#include "monobound/rng.hpp"
#include "monobound/tolerances.hpp"

namespace monobound {

// Basis convention: subsystem 0 is the most significant digit of the basis
// index, so |abc> for qubits maps to index 4a + 2b + c.

/// Normalized amplitude vector over a tensor product of subsystems.
struct PureState {
  std::vector<std::size_t> subsystem_dims;
  std::vector<Complex> amplitudes;
  /// Factor the input vector was multiplied by during construction.
  double norm_factor = 1.0;

  std::size_t total_dim() const {
    std::size_t d = 1;
    for (std::size_t s : subsystem_dims) d *= s;
    return d;
  }
};

/// Hermitian, PSD, unit-trace matrix with a subsystem dimension list.
struct DensityMatrix {
  std::vector<std::size_t> subsystem_dims;
  ComplexMatrix matrix;
};

/// A bipartition focus|rest of the subsystem indices.
struct BipartiteSplit {
  std::vector<std::size_t> focus;
  std::vector<std::size_t> rest;
};

inline std::size_t product_of(const std::vector<std::size_t>& dims) {
  std::size_t d = 1;
  for (std::size_t s : dims) d *= s;
  return d;
}

/// Builds a normalized pure state, recording the applied norm factor.
inline PureState make_pure(std::vector<Complex> amplitudes, std::vector<std::size_t> dims) {
  if (dims.empty() || amplitudes.size() != product_of(dims))
    throw LengthMismatch("make_pure: amplitude count does not match subsystem dimensions");
  double norm_sq = 0.0;
  for (const Complex& z : amplitudes) norm_sq += std::norm(z);
  const double norm = std::sqrt(norm_sq);
  if (norm <= tol::norm) throw ZeroVector("make_pure: input vector has (near) zero norm");
  for (Complex& z : amplitudes) z /= norm;
  return PureState{std::move(dims), std::move(amplitudes), 1.0 / norm};
}

namespace detail {

inline void validate_density(const DensityMatrix& rho) {
  if (rho.matrix.dim() != product_of(rho.subsystem_dims))
    throw LengthMismatch("density matrix dimension does not match subsystem dimensions");
  if (!rho.matrix.is_hermitian(tol::hermitian))
    throw NotHermitian("density matrix is not Hermitian");
  if (std::abs(rho.matrix.trace().real() - 1.0) > tol::trace ||
      std::abs(rho.matrix.trace().imag()) > tol::trace)
    throw NotNormalized("density matrix trace is not 1");
  if (!rho.matrix.is_psd(tol::psd))
    throw NotPSD("density matrix is not positive semidefinite");
}

}  // namespace detail

/// Validating constructor for externally supplied density matrices.
inline DensityMatrix make_density(ComplexMatrix matrix, std::vector<std::size_t> dims) {
  DensityMatrix rho{std::move(dims), std::move(matrix)};
  detail::validate_density(rho);
  return rho;
}

/// The projector |psi><psi|.
inline DensityMatrix density_of(const PureState& psi) {
  const std::size_t d = psi.total_dim();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  return DensityMatrix{psi.subsystem_dims, std::move(m)};
}

/// Validates a focus set against the subsystem count and returns focus|rest.
inline BipartiteSplit make_split(std::size_t n_subsystems,
                                 const std::vector<std::size_t>& focus) {
  std::set<std::size_t> fset(focus.begin(), focus.end());
  if (fset.empty() || fset.size() >= n_subsystems)
    throw BadSplit("make_split: focus must be a nonempty proper subset");
  for (std::size_t idx : fset)
    if (idx >= n_subsystems) throw BadSplit("make_split: focus index out of range");
  BipartiteSplit split;
  split.focus.assign(fset.begin(), fset.end());
  for (std::size_t i = 0; i < n_subsystems; ++i)
    if (!fset.count(i)) split.rest.push_back(i);
  return split;
}

/// Traces out the given subsystems by direct index-pair summation.
/// Kept subsystems stay in their original order.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::size_t>& discard) {
  const std::size_t n = rho.subsystem_dims.size();
  std::set<std::size_t> dset(discard.begin(), discard.end());
  if (dset.empty() || dset.size() >= n)
    throw BadSubset("partial_trace: discard set must be a nonempty proper subset");
  for (std::size_t idx : dset)
    if (idx >= n) throw BadSubset("partial_trace: discard index out of range");

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!dset.count(i)) kept.push_back(i);

  // Big-endian strides: subsystem 0 is most significant.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * rho.subsystem_dims[i];

  std::vector<std::size_t> kept_dims;
  for (std::size_t i : kept) kept_dims.push_back(rho.subsystem_dims[i]);
  std::vector<std::size_t> disc_dims;
  for (std::size_t i : dset) disc_dims.push_back(rho.subsystem_dims[i]);
  const std::size_t dk = product_of(kept_dims);
  const std::size_t dd = product_of(disc_dims);

  // Maps a flat index over a dimension list to a full-space offset.
  auto offset_of = [&](std::size_t flat, const std::vector<std::size_t>& subs,
                       const std::vector<std::size_t>& sub_dims) {
    std::size_t off = 0;
    for (std::size_t i = subs.size(); i-- > 0;) {
      off += (flat % sub_dims[i]) * stride[subs[i]];
      flat /= sub_dims[i];
    }
    return off;
  };

  std::vector<std::size_t> disc(dset.begin(), dset.end());
  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t row_base = offset_of(r, kept, kept_dims);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t col_base = offset_of(c, kept, kept_dims);
      Complex sum = 0.0;
      for (std::size_t t = 0; t < dd; ++t) {
        const std::size_t toff = offset_of(t, disc, disc_dims);
        sum += rho.matrix(row_base + toff, col_base + toff);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix{std::move(kept_dims), std::move(out)};
}

/// Three-qubit pure state with amplitudes at |000>, |100>, |101>, |110>, |111>:
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
inline PureState acin_state(double l0, double l1, double l2, double l3, double l4,
                            double phi) {
  const double coeffs[5] = {l0, l1, l2, l3, l4};
  double sum_sq = 0.0;
  for (double c : coeffs) {
    if (c < 0.0) throw NegativeCoefficient("acin_state: coefficients must be nonnegative");
    sum_sq += c * c;
  }
  if (std::abs(sum_sq - 1.0) > tol::coeff_norm)
    throw NotNormalized("acin_state: squared coefficients must sum to 1");

  // Coefficients are placed verbatim (no renormalization) so callers get
  // back exactly what they passed in.
  std::vector<Complex> amps(8, Complex{0.0, 0.0});
  amps[0] = l0;                                                // |000>
  amps[4] = l1 * Complex{std::cos(phi), std::sin(phi)};        // |100>
  amps[5] = l2;                                                // |101>
  amps[6] = l3;                                                // |110>
  amps[7] = l4;                                                // |111>
  return PureState{{2, 2, 2}, std::move(amps), 1.0};
}

/// Mixture p |W><W| + (1-p) |000><000| with W = a1|100> + a2|010> + a3|001>.
inline DensityMatrix w_mixture(double a1, double a2, double a3, double p) {
  if (a1 < 0.0 || a2 < 0.0 || a3 < 0.0)
    throw NegativeCoefficient("w_mixture: coefficients must be nonnegative");
  if (std::abs(a1 * a1 + a2 * a2 + a3 * a3 - 1.0) > tol::coeff_norm)
    throw NotNormalized("w_mixture: squared coefficients must sum to 1");
  if (p < 0.0 || p > 1.0) throw BadProbability("w_mixture: p must lie in [0, 1]");

  std::vector<Complex> w(8, Complex{0.0, 0.0});
  w[4] = a1;  // |100>
  w[2] = a2;  // |010>
  w[1] = a3;  // |001>

  ComplexMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = p * w[i] * std::conj(w[j]);
  m(0, 0) += 1.0 - p;
  return DensityMatrix{{2, 2, 2}, std::move(m)};
}

/// Haar-random pure state on n qubits: normalized vector of independent
/// standard complex Gaussians. Identical seed gives an identical state.
inline PureState haar_random_pure(std::size_t n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 6)
    throw TooLarge("haar_random_pure: n_qubits must lie in [1, 6]");
  SeededRng rng(seed);
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (Complex& z : amps) z = rng.complex_gaussian();
  return make_pure(std::move(amps), std::vector<std::size_t>(n_qubits, 2));
}

}  // namespace monobound
