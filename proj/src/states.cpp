#include "weakdistill/states.hpp"

#include <cmath>

#include "weakdistill/entanglement.hpp"

namespace weakdistill {

SchmidtState::SchmidtState(double alpha, double beta, int dim_b)
    : alpha_(alpha), beta_(beta), dim_b_(dim_b) {
  if (alpha < 0.0 || beta < 0.0)
    throw InvalidState("Schmidt coefficients must be non-negative");
  if (std::abs(alpha * alpha + beta * beta - 1.0) > tol::normalization)
    throw InvalidState("Schmidt coefficients are not normalized");
  if (dim_b < 2) throw DimensionMismatch("system B dimension must be >= 2");
}

SchmidtState SchmidtState::from_alpha_sq(double alpha_sq, int dim_b) {
  if (alpha_sq < 0.0 || alpha_sq > 1.0)
    throw InvalidState("alpha^2 must lie in [0, 1]");
  return SchmidtState(std::sqrt(alpha_sq), std::sqrt(1.0 - alpha_sq), dim_b);
}

Vec SchmidtState::vector() const {
  Vec v = Vec::Zero(2 * dim_b_);
  v(0) = alpha_;            // |0>|phi_0>
  v(dim_b_ + 1) = beta_;    // |1>|phi_1>
  return v;
}

TwoQubitDensity::TwoQubitDensity(const Mat4& mat) : mat_(mat) {
  if (!is_hermitian(mat_)) throw InvalidState("density matrix is not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > tol::hermitian)
    throw InvalidState("density matrix trace is not 1");
  if (!positivity_check(mat_))
    throw InvalidState("density matrix is not positive semidefinite");
}

LSDecomposition::LSDecomposition(double lambda, TwoQubitDensity separable,
                                 SchmidtState pure)
    : lambda_(lambda),
      separable_(std::move(separable)),
      pure_(std::move(pure)) {
  if (lambda < 0.0 || lambda > 1.0)
    throw InvalidState("lambda must lie in [0, 1]");
  if (pure_.dim_b() != 2)
    throw DimensionMismatch("LS decomposition requires a two-qubit pure part");
  if (!ppt_check(separable_))
    throw InvalidState("separable part fails the PPT criterion");
}

TwoQubitDensity schmidt_to_density(const SchmidtState& s) {
  if (s.dim_b() != 2)
    throw DimensionMismatch("schmidt_to_density requires d = 2");
  const Vec v = s.vector();
  Mat4 m = (v * v.adjoint());
  return TwoQubitDensity(m);
}

Mat2 reduced_density_A(const SchmidtState& s) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = s.alpha() * s.alpha();
  m(1, 1) = s.beta() * s.beta();
  return m;
}

TwoQubitDensity ls_to_density(const LSDecomposition& dec) {
  const Mat4 pure = schmidt_to_density(dec.pure()).matrix();
  Mat4 m = dec.lambda() * dec.separable().matrix() + (1.0 - dec.lambda()) * pure;
  return TwoQubitDensity(m);
}

}  // namespace weakdistill
