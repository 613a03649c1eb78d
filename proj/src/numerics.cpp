#include "weakdistill/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace weakdistill {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool is_hermitian(const Mat& m, double tau) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tau;
}

Eigen::SelfAdjointEigenSolver<Mat> hermitian_eigensystem(const Mat& m) {
  if (!is_hermitian(m))
    throw NotHermitian("matrix fails the Hermiticity gate (tau = 1e-10)");
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  return solver;
}

std::vector<double> hermitian_eigenvalues(const Mat& m) {
  auto solver = hermitian_eigensystem(m);
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

bool positivity_check(const Mat& m) {
  if (!is_hermitian(m))
    throw NotHermitian("matrix fails the Hermiticity gate (tau = 1e-10)");
  const auto n = static_cast<std::size_t>(m.rows());

  // Power sums p_k = tr(m^k), real for Hermitian input.
  std::vector<double> p(n + 1, 0.0);
  Mat power = Mat::Identity(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * m;
    p[k] = power.trace().real();
  }

  // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = 0.0;
    double sign = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc += sign * e[k - i] * p[i];
      sign = -sign;
    }
    e[k] = acc / static_cast<double>(k);
    if (e[k] < -tol::positivity) return false;
  }
  return true;
}

}  // namespace weakdistill
