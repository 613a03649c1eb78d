#pragma once

#include "weakdistill/states.hpp"

namespace weakdistill {

/// Linear entropy S(psi) = 2[1 - tr(rho_A^2)] = 4 alpha^2 beta^2.
double linear_entropy(const SchmidtState& s);

/// Wootters concurrence of a two-qubit density matrix, evaluated through
/// the singular values of sqrt(rho) (sigma_y (x) sigma_y) sqrt(rho)^*,
/// which coincide with the square roots of the spectrum of
/// sqrt(rho) rho_tilde sqrt(rho) but avoid roundoff amplification.
double concurrence(const TwoQubitDensity& rho);

/// E(rho) = (1 - lambda) S(psi) for a state in LS form.
double e_measure(const LSDecomposition& dec);

/// Transpose on the system-B indices: (ia,ib),(ja,jb) -> (ia,jb),(ja,ib).
Mat4 partial_transpose_B(const Mat4& rho);

inline Mat4 partial_transpose_B(const TwoQubitDensity& rho) {
  return partial_transpose_B(rho.matrix());
}

/// PPT separability test; necessary and sufficient for 2x2 systems.
bool ppt_check(const Mat4& rho);

inline bool ppt_check(const TwoQubitDensity& rho) {
  return ppt_check(rho.matrix());
}

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-tol::eigen_floor, 0) are clamped to zero.
Mat4 psd_sqrt(const Mat4& m);

}  // namespace weakdistill
