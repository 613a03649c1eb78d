#include "weakdistill/sampling.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "weakdistill/parallel.hpp"

namespace weakdistill {

Mat4 separable_matrix(const SeparableParams& params) {
  const std::array<Mat2, 3> sigma = {pauli_x(), pauli_y(), pauli_z()};
  Mat4 m = Mat4::Identity();
  for (int i = 0; i < 3; ++i) {
    m += params.a(i) * kron(sigma[static_cast<std::size_t>(i)], identity2());
    m += params.b(i) * kron(identity2(), sigma[static_cast<std::size_t>(i)]);
    for (int j = 0; j < 3; ++j)
      m += params.c(i, j) * kron(sigma[static_cast<std::size_t>(i)],
                                 sigma[static_cast<std::size_t>(j)]);
  }
  return 0.25 * m;
}

namespace {

// Uniform point in the closed unit ball, by rejection from the cube
// (acceptance ~0.52, deterministic given the stream).
Eigen::Vector3d uniform_ball(RngStream& rng) {
  while (true) {
    Eigen::Vector3d v(rng.uniform_sym(), rng.uniform_sym(), rng.uniform_sym());
    if (v.squaredNorm() <= 1.0) return v;
  }
}

}  // namespace

SeparableParams sample_separable(double a_sz, RngStream& rng) {
  if (std::abs(a_sz) > 1.0)
    throw ConfigError("A_{s,z} must lie in [-1, 1]");
  // Proposal: a convex mixture of kComponents product states whose A-side
  // Bloch vectors all share z = a_sz. The mixture is separable by
  // construction and satisfies tr[(sigma_z (x) I) rho_s] = a_sz exactly for
  // any weights, so the constraint never has to be met by rejection. A
  // naive uniform proposal over the 15-cube is hopeless here: the fraction
  // of positive candidates is ~1e-6 at a_sz = 0 and vanishes toward
  // |a_sz| = 1. positivity_check/ppt_check stay on as verification and to
  // honour the budget contract.
  constexpr int kComponents = 6;
  const double disc = std::sqrt(std::max(1.0 - a_sz * a_sz, 0.0));
  for (long attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::array<double, kComponents> weights{};
    double total = 0.0;
    for (double& w : weights) {
      w = -std::log1p(-rng.uniform01());  // Exp(1) -> flat Dirichlet
      total += w;
    }

    SeparableParams params;
    params.a.setZero();
    params.b.setZero();
    params.c.setZero();
    for (double w : weights) {
      constexpr double kTwoPi = 6.283185307179586476925286766559;
      const double angle = kTwoPi * rng.uniform01();
      const double radius = disc * std::sqrt(rng.uniform01());
      const Eigen::Vector3d bloch_a(radius * std::cos(angle),
                                    radius * std::sin(angle), a_sz);
      const Eigen::Vector3d bloch_b = uniform_ball(rng);
      params.a += (w / total) * bloch_a;
      params.b += (w / total) * bloch_b;
      params.c += (w / total) * bloch_a * bloch_b.transpose();
    }
    params.a(2) = a_sz;  // exact, not up to the rounding of the weight sum

    const Mat4 m = separable_matrix(params);
    if (!positivity_check(m)) continue;
    if (!ppt_check(m)) continue;
    return params;
  }
  throw RejectionBudgetExceeded(
      "no separable state accepted within 10^6 candidates");
}

SeparableParams sample_separable(double a_sz, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return sample_separable(a_sz, rng);
}

std::vector<MonteCarloCell> monte_carlo_map(
    double a_sz, const std::vector<double>& s_grid,
    const std::vector<double>& lambda_grid, int n, std::uint64_t seed,
    int n_threads) {
  if (n < 1) throw ConfigError("monte_carlo_map needs n >= 1 samples per cell");
  for (double s : s_grid)
    if (s <= 0.0 || s >= 1.0) throw ConfigError("S grid must lie in (0, 1)");
  for (double l : lambda_grid)
    if (l <= 0.0 || l >= 1.0) throw ConfigError("lambda grid must lie in (0, 1)");

  const int n_cells = static_cast<int>(s_grid.size() * lambda_grid.size());
  std::vector<MonteCarloCell> cells(static_cast<std::size_t>(n_cells));
  std::exception_ptr failure = nullptr;
  std::mutex failure_mutex;

  parallel_for(n_cells, n_threads, [&](int idx) {
    try {
      const std::size_t i = static_cast<std::size_t>(idx) / lambda_grid.size();
      const std::size_t j = static_cast<std::size_t>(idx) % lambda_grid.size();
      const double s_value = s_grid[i];
      const double lambda = lambda_grid[j];
      const double alpha_sq = 0.5 * (1.0 - std::sqrt(1.0 - s_value));
      const SchmidtState pure = SchmidtState::from_alpha_sq(alpha_sq);

      RngStream rng(seed, static_cast<std::uint64_t>(idx));
      double sum_before = 0.0;
      double sum_after = 0.0;
      for (int k = 0; k < n; ++k) {
        const SeparableParams params = sample_separable(a_sz, rng);
        const LSDecomposition dec(
            lambda, TwoQubitDensity(separable_matrix(params)), pure);
        const SingleShotResult shot = single_shot(dec);
        sum_before += shot.concurrence_delta.before;
        sum_after += shot.concurrence_delta.after;
      }
      const double mean_before = sum_before / n;
      const double mean_after = sum_after / n;
      const double delta = mean_after - mean_before;
      const int sign =
          std::abs(delta) <= tol::zero_band ? 0 : (delta > 0 ? 1 : -1);
      cells[static_cast<std::size_t>(idx)] = {
          s_value, lambda, a_sz, n, mean_before, mean_after, sign};
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  return cells;
}

}  // namespace weakdistill
