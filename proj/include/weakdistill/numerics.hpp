#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "weakdistill/errors.hpp"

namespace weakdistill {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec = Eigen::VectorXcd;

// Central tolerance record. These values are referenced by every module;
// change them here, not at call sites.
namespace tol {
inline constexpr double hermitian = 1e-10;       // max |m - m^dag| gate
inline constexpr double positivity = 1e-12;      // Newton's-identities slack
inline constexpr double eigen_floor = 1e-9;      // min-eigenvalue positivity band
inline constexpr double completeness = 1e-12;    // POVM / trace-preservation
inline constexpr double normalization = 1e-12;   // alpha^2 + beta^2 = 1
inline constexpr double zero_band = 1e-9;        // |C| below this counts as zero
inline constexpr double probability_floor = 1e-15;
inline constexpr double degenerate = 1e-12;      // |alpha - beta| already-maximal gate
inline constexpr double convergence = 1e-12;     // successive-difference stop
}  // namespace tol

inline Mat2 identity2() { return Mat2::Identity(); }

inline Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Mat2 pauli_y() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

/// Kronecker product, row-major index convention:
/// (a (x) b)[i*q + r, j*c + s] = a[i,j] * b[r,s].
Mat kron(const Mat& a, const Mat& b);

/// Entrywise Hermiticity test: max |m - m^dag| <= tau.
bool is_hermitian(const Mat& m, double tau = tol::hermitian);

/// Eigenvalues of a Hermitian matrix, sorted descending.
/// Throws NotHermitian if the entrywise gate fails.
std::vector<double> hermitian_eigenvalues(const Mat& m);

/// Full Hermitian eigendecomposition (ascending order, Eigen convention).
Eigen::SelfAdjointEigenSolver<Mat> hermitian_eigensystem(const Mat& m);

/// Positivity via Newton's identities: all elementary symmetric polynomials
/// e_1..e_n of the spectrum, computed from traces of matrix powers, must be
/// >= -tol::positivity. No eigensolve involved; the eigenvalue route is the
/// independent oracle in the tests.
bool positivity_check(const Mat& m);

}  // namespace weakdistill
