#pragma once

#include "weakdistill/numerics.hpp"

namespace weakdistill {

/// Pure bipartite state in Schmidt form,
///   alpha |0>|phi_0> + beta |1>|phi_1>,
/// with real non-negative coefficients and |phi_i> fixed to the first two
/// computational basis vectors of C^d. Index ordering is system A first.
class SchmidtState {
 public:
  SchmidtState(double alpha, double beta, int dim_b = 2);

  /// Builds the state with alpha = sqrt(alpha_sq), beta = sqrt(1 - alpha_sq).
  static SchmidtState from_alpha_sq(double alpha_sq, int dim_b = 2);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int dim_b() const { return dim_b_; }

  /// Full 2d-dimensional state vector.
  Vec vector() const;

 private:
  double alpha_;
  double beta_;
  int dim_b_;
};

/// 4x4 density matrix over |00>,|01>,|10>,|11| (system A first).
/// Construction enforces Hermiticity, unit trace, and positivity.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(const Mat4& mat);

  const Mat4& matrix() const { return mat_; }

  static TwoQubitDensity maximally_mixed() {
    return TwoQubitDensity(Mat4::Identity() * 0.25);
  }

 private:
  Mat4 mat_;
};

/// Convex decomposition rho = lambda rho_s + (1 - lambda) |psi><psi|
/// with rho_s separable (PPT-checked at construction).
class LSDecomposition {
 public:
  LSDecomposition(double lambda, TwoQubitDensity separable, SchmidtState pure);

  double lambda() const { return lambda_; }
  const TwoQubitDensity& separable() const { return separable_; }
  const SchmidtState& pure() const { return pure_; }

 private:
  double lambda_;
  TwoQubitDensity separable_;
  SchmidtState pure_;
};

TwoQubitDensity schmidt_to_density(const SchmidtState& s);

/// Reduced density matrix of system A: diag(alpha^2, beta^2).
Mat2 reduced_density_A(const SchmidtState& s);

TwoQubitDensity ls_to_density(const LSDecomposition& dec);

}  // namespace weakdistill
