#pragma once

// All numeric tolerances used by the library, collected in one place.

namespace monobound::tol {

// Hermiticity: max |M - M^dag| entry.
inline constexpr double hermitian = 1e-10;

// Positive semidefiniteness: min eigenvalue >= -psd.
inline constexpr double psd = 1e-9;

// Unit trace of a density matrix.
inline constexpr double trace = 1e-10;

// Zero-vector rejection and state normalization.
inline constexpr double norm = 1e-12;

// Coefficient normalization for the named state families (sum of squares = 1).
inline constexpr double coeff_norm = 1e-10;

// Jacobi eigensolver: stop when the off-diagonal Frobenius norm drops below
// eig_offdiag * max(1, ||A||_F).
inline constexpr double eig_offdiag = 1e-14;
inline constexpr int eig_max_sweeps = 64;

// Eigenvalues in [-eig_clamp, 0) are treated as round-off and clamped to 0
// before square roots.
inline constexpr double eig_clamp = 1e-9;

// Positive round-off dust below eig_dust * max(1, lambda_max) is clamped to
// 0 before square roots as well: sqrt amplifies an O(eps) eigenvalue of an
// exactly singular matrix to O(1e-8), which would dominate the concurrence
// error budget.
inline constexpr double eig_dust = 1e-13;

// Concurrences below this are reported as exactly 0.
inline constexpr double concurrence_zero = 1e-12;

// Slack accepted on inequality checks (violation tolerance) and on the
// closed x <= 1/k domains of the lemma evaluators.
inline constexpr double inequality = 1e-12;
inline constexpr double domain_slack = 1e-12;

// Exponents within this distance of an integer are evaluated by repeated
// multiplication instead of std::pow.
inline constexpr double integer_power = 1e-9;

}  // namespace monobound::tol
