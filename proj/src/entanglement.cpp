#include "weakdistill/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace weakdistill {

double linear_entropy(const SchmidtState& s) {
  const double a2 = s.alpha() * s.alpha();
  const double b2 = s.beta() * s.beta();
  return 4.0 * a2 * b2;
}

Mat4 psd_sqrt(const Mat4& m) {
  auto solver = hermitian_eigensystem(m);
  Eigen::Vector4d vals = solver.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (vals(i) < 0.0) {
      if (vals(i) < -tol::eigen_floor)
        throw InvalidState("psd_sqrt input has a significantly negative eigenvalue");
      vals(i) = 0.0;
    }
  }
  const Mat4 v = solver.eigenvectors();
  return v * vals.cwiseSqrt().asDiagonal() * v.adjoint();
}

double concurrence(const TwoQubitDensity& rho) {
  // sqrt(rho) with roundoff-scale eigenvalues flushed to zero: keeping a
  // spurious 1e-17 eigenvalue would inject a sqrt-amplified ~3e-9
  // component into the root and cap the achievable accuracy there.
  constexpr double kSpectrumFloor = 1e-13;
  auto solver = hermitian_eigensystem(rho.matrix());
  Eigen::Vector4d vals = solver.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (vals(i) < -tol::eigen_floor)
      throw InvalidState("concurrence input has a negative eigenvalue");
    vals(i) = vals(i) < kSpectrumFloor ? 0.0 : std::sqrt(vals(i));
  }
  const Mat4 v = solver.eigenvectors();
  const Mat4 root = v * vals.asDiagonal() * v.adjoint();

  // The Wootters spectrum sqrt(eig[sqrt(rho) rho~ sqrt(rho)]) equals the
  // singular values of B = sqrt(rho) (sy x sy) sqrt(rho)^*, since
  // B B^dag = sqrt(rho) rho~ sqrt(rho). Taking singular values directly
  // avoids square roots of near-zero eigenvalues, whose absolute error
  // would blow up from ~1e-16 to ~1e-8.
  const Mat4 yy = kron(pauli_y(), pauli_y());
  const Mat4 b = root * yy * root.conjugate();
  Eigen::JacobiSVD<Mat4> svd(b);
  const auto& s = svd.singularValues();
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double e_measure(const LSDecomposition& dec) {
  return (1.0 - dec.lambda()) * linear_entropy(dec.pure());
}

Mat4 partial_transpose_B(const Mat4& rho) {
  Mat4 out;
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb)
          out(2 * ia + jb, 2 * ja + ib) = rho(2 * ia + ib, 2 * ja + jb);
  return out;
}

bool ppt_check(const Mat4& rho) {
  return positivity_check(partial_transpose_B(rho));
}

}  // namespace weakdistill
