#pragma once

#include <cstdint>
#include <vector>

#include "weakdistill/mixed.hpp"
#include "weakdistill/rng.hpp"

namespace weakdistill {

/// Pauli-basis parameters of a candidate separable two-qubit state,
///   rho_s = (1/4)(I + sum_i a_i sigma_i (x) I + sum_j b_j I (x) sigma_j
///                 + sum_ij c_ij sigma_i (x) sigma_j),
/// indices ordered (x, y, z).
struct SeparableParams {
  Eigen::Vector3d a;
  Eigen::Vector3d b;
  Eigen::Matrix3d c;
};

Mat4 separable_matrix(const SeparableParams& params);

inline constexpr long kRejectionBudget = 1'000'000;

/// Samples a separable state with A_{s,z} fixed exactly to a_sz, as a
/// random convex mixture of product states whose A-side Bloch vectors all
/// carry z = a_sz. Candidates are still screened with positivity_check and
/// ppt_check. Deterministic given the stream state. Throws
/// RejectionBudgetExceeded after 10^6 rejected candidates.
SeparableParams sample_separable(double a_sz, RngStream& rng);

/// Convenience overload with a dedicated stream keyed by (seed, 0).
SeparableParams sample_separable(double a_sz, std::uint64_t seed);

struct MonteCarloCell {
  double s_value;
  double lambda;
  double a_sz;
  int n_samples;
  double mean_c_before;
  double mean_c_after;
  int sign;
};

/// Mean-concurrence sign map over an (S, lambda) grid at fixed A_{s,z}.
/// Each cell draws n separable states from its own stream (keyed by the
/// row-major cell index), mixes them with the pure state solving
/// 4 alpha^2 beta^2 = S (beta > alpha), applies the single-shot protocol
/// and records sgn of the mean concurrence difference. Parallel execution
/// reproduces the sequential result exactly.
std::vector<MonteCarloCell> monte_carlo_map(double a_sz,
                                            const std::vector<double>& s_grid,
                                            const std::vector<double>& lambda_grid,
                                            int n, std::uint64_t seed,
                                            int n_threads = 1);

}  // namespace weakdistill
