#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "weakdistill/measurements.hpp"

namespace weakdistill {

/// Measurement-strength schedule eps_1..eps_N following the recurrence
/// eps_n = 2 eps_{n-1} / (1 + eps_{n-1}^2), eps_1 = sqrt(1 - S(psi)).
struct Schedule {
  std::vector<double> epsilons;
};

struct TraceStep {
  int n;
  double epsilon;
  double p;       // success probability at this step, (1 - eps^2)/2
  double p_net;   // p_n * prod_{k<n} (1 - p_k)
  double p_s;     // cumulative sum of p_net
};

struct ProtocolTrace {
  std::vector<TraceStep> steps;
  double total_success;  // p_s at the last step
  bool converged;        // |p_s_N - p_s_{N-1}| < tol::convergence
  SchmidtState residual; // state after N consecutive failures
};

struct TrajectoryResult {
  bool success;
  int steps_used;
  SchmidtState final_state;
  std::uint64_t rng_seed;
};

/// If alpha > beta, returns the mirrored state (roles of the two outcomes
/// swapped) and true; otherwise the state unchanged and false.
std::pair<SchmidtState, bool> swap_convention(const SchmidtState& s);

/// eps_1 = |beta^2 - alpha^2| = sqrt(1 - S(psi)).
/// Throws AlreadyMaximal when alpha = beta.
double initial_strength(const SchmidtState& s);

Schedule build_schedule(const SchmidtState& s, int n_steps);

ProtocolTrace analytic_trace(const SchmidtState& s, int n_steps);

/// Runs analytic_trace with enough steps to reach the successive-difference
/// convergence threshold (capped at max_steps).
ProtocolTrace converged_trace(const SchmidtState& s, int max_steps = 200);

/// One stochastic realization of the repeated protocol. Deterministic given
/// (seed, n_steps); each trajectory in a batch gets its own stream keyed by
/// trajectory index, so batches reproduce independent of scheduling.
TrajectoryResult run_trajectory(const SchmidtState& s, int n_steps,
                                std::uint64_t seed);

struct TrajectoryBatchSummary {
  int n_samples;
  int n_success;
  double success_fraction;
  double mean_steps_to_success;  // over successful trajectories; 0 if none
};

TrajectoryBatchSummary run_trajectory_batch(const SchmidtState& s, int n_steps,
                                            std::uint64_t master_seed,
                                            int n_samples, int n_threads = 1);

/// CSV columns: n,epsilon_n,p_n,p_net_n,p_s_n (17 significant digits).
void write_trace_csv(std::ostream& out, const ProtocolTrace& trace);

}  // namespace weakdistill
