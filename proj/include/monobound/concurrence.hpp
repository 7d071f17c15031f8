#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "monobound/complex_matrix.hpp"
#include "monobound/errors.hpp"
#include "monobound/states.hpp"
#include "monobound/tolerances.hpp"

namespace monobound {

/// Focus-vs-rest entanglement of a state: the value across the full cut
/// A|B1...B_{N-1} (when computable) plus the pairwise values A|B_i.
struct EntanglementVector {
  std::optional<double> total;
  std::vector<double> pairwise;
  std::string measure_tag = "concurrence";
  double alpha_default = 2.0;
};

namespace detail {

inline double clamp_concurrence(double c) {
  return c < tol::concurrence_zero ? 0.0 : c;
}

inline ComplexMatrix sigma_y_pair() {
  // sigma_y (x) sigma_y: real anti-diagonal (-1, 1, 1, -1).
  ComplexMatrix f(4);
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

}  // namespace detail

/// Concurrence of a pure state across the given bipartition:
/// sqrt(2 (1 - Tr rho_focus^2)).
inline double pure_concurrence(const PureState& psi, const BipartiteSplit& split) {
  const std::size_t n = psi.subsystem_dims.size();
  if (split.focus.empty() || split.rest.empty() ||
      split.focus.size() + split.rest.size() != n)
    throw BadSplit("pure_concurrence: split does not cover the subsystems");
  for (std::size_t idx : split.focus)
    if (idx >= n) throw BadSplit("pure_concurrence: focus index out of range");

  const DensityMatrix reduced = partial_trace(density_of(psi), split.rest);
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double purity = 0.0;
  for (const Complex& z : reduced.matrix.entries()) purity += std::norm(z);
  const double c_sq = std::max(0.0, 2.0 * (1.0 - purity));
  return detail::clamp_concurrence(std::sqrt(c_sq));
}

/// The spin-flipped matrix (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
inline ComplexMatrix spin_flip(const DensityMatrix& rho) {
  if (rho.matrix.dim() != 4)
    throw WrongDimension("spin_flip: expected a two-qubit (4x4) state");
  const ComplexMatrix f = detail::sigma_y_pair();
  return f * rho.matrix.conjugate() * f;
}

/// Analytic two-qubit concurrence: max(0, l1 - l2 - l3 - l4) with l_i the
/// descending square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho).
inline double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.matrix.dim() != 4)
    throw WrongDimension("wootters_concurrence: expected a two-qubit (4x4) state");
  const ComplexMatrix root = herm_sqrt(rho.matrix);
  ComplexMatrix h = root * spin_flip(rho) * root;
  // h is Hermitian PSD up to round-off; symmetrize before decomposing.
  h = (h + h.adjoint()).scaled(0.5);
  HermitianSpectrum spec = herm_eig(h);
  // Clamp round-off dust before the square roots (see tol::eig_dust).
  const double dust = tol::eig_dust * std::max(1.0, spec.eigenvalues[0]);
  double lambda[4];
  for (int i = 0; i < 4; ++i)
    lambda[i] = spec.eigenvalues[i] < dust ? 0.0 : std::sqrt(spec.eigenvalues[i]);
  return detail::clamp_concurrence(
      std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]));
}

namespace detail {

inline EntanglementVector pairwise_concurrences(const DensityMatrix& rho,
                                                std::size_t focus) {
  const std::size_t n = rho.subsystem_dims.size();
  if (focus >= n) throw BadSplit("concurrence_vector: focus index out of range");
  for (std::size_t d : rho.subsystem_dims)
    if (d != 2) throw NotQubits("concurrence_vector: all subsystems must be qubits");

  EntanglementVector ev;
  for (std::size_t b = 0; b < n; ++b) {
    if (b == focus) continue;
    std::vector<std::size_t> discard;
    for (std::size_t i = 0; i < n; ++i)
      if (i != focus && i != b) discard.push_back(i);
    const DensityMatrix pair =
        discard.empty() ? rho : partial_trace(rho, discard);
    ev.pairwise.push_back(wootters_concurrence(pair));
  }
  return ev;
}

}  // namespace detail

/// Pairwise concurrences of focus with each other qubit, plus the pure-state
/// concurrence across focus|rest.
inline EntanglementVector concurrence_vector(const PureState& psi, std::size_t focus) {
  EntanglementVector ev = detail::pairwise_concurrences(density_of(psi), focus);
  const BipartiteSplit split = make_split(psi.subsystem_dims.size(), {focus});
  ev.total = pure_concurrence(psi, split);
  return ev;
}

/// Mixed-state variant: the total across focus|rest is not computable here
/// and is reported absent.
inline EntanglementVector concurrence_vector(const DensityMatrix& rho, std::size_t focus) {
  return detail::pairwise_concurrences(rho, focus);
}

/// Convenience helper: copy of ev with pairwise sorted in descending order.
/// The bound evaluators themselves never reorder.
inline EntanglementVector sorted_descending(const EntanglementVector& ev) {
  EntanglementVector out = ev;
  std::sort(out.pairwise.begin(), out.pairwise.end(), std::greater<double>());
  return out;
}

}  // namespace monobound
