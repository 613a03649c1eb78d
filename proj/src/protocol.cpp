#include "weakdistill/protocol.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "weakdistill/parallel.hpp"
#include "weakdistill/rng.hpp"

namespace weakdistill {

std::pair<SchmidtState, bool> swap_convention(const SchmidtState& s) {
  if (s.alpha() > s.beta())
    return {SchmidtState(s.beta(), s.alpha(), s.dim_b()), true};
  return {s, false};
}

double initial_strength(const SchmidtState& s) {
  if (std::abs(s.alpha() - s.beta()) < tol::degenerate)
    throw AlreadyMaximal("state is already maximally entangled");
  const double a2 = s.alpha() * s.alpha();
  const double b2 = s.beta() * s.beta();
  return std::abs(b2 - a2);
}

Schedule build_schedule(const SchmidtState& s, int n_steps) {
  if (n_steps < 1) throw ConfigError("schedule length must be >= 1");
  Schedule sched;
  sched.epsilons.reserve(static_cast<std::size_t>(n_steps));
  double eps = initial_strength(s);
  sched.epsilons.push_back(eps);
  for (int n = 2; n <= n_steps; ++n) {
    eps = 2.0 * eps / (1.0 + eps * eps);
    sched.epsilons.push_back(eps);
  }
  return sched;
}

ProtocolTrace analytic_trace(const SchmidtState& s, int n_steps) {
  const auto [state, swapped] = swap_convention(s);
  const Schedule sched = build_schedule(state, n_steps);

  ProtocolTrace trace{.steps = {},
                      .total_success = 0.0,
                      .converged = false,
                      .residual = state};
  trace.steps.reserve(sched.epsilons.size());

  double survival = 1.0;  // prod_{k<n} (1 - p_k)
  double p_s = 0.0;
  double p_s_prev = 0.0;
  SchmidtState current = state;
  for (int n = 1; n <= n_steps; ++n) {
    const double eps = sched.epsilons[static_cast<std::size_t>(n - 1)];
    const double p = 0.5 * (1.0 - eps * eps);
    const double p_net = p * survival;
    p_s_prev = p_s;
    p_s += p_net;
    trace.steps.push_back({n, eps, p, p_net, p_s});
    survival *= 1.0 - p;
    current = apply_pure(WeakMeasurement(eps), current, Outcome::minus).state;
  }
  trace.total_success = p_s;
  trace.converged = n_steps >= 2 && std::abs(p_s - p_s_prev) < tol::convergence;
  trace.residual = swapped
                       ? SchmidtState(current.beta(), current.alpha(), s.dim_b())
                       : current;
  return trace;
}

ProtocolTrace converged_trace(const SchmidtState& s, int max_steps) {
  // The schedule converges doubly exponentially, so scanning forward in
  // small increments stays cheap.
  for (int n = 2; n <= max_steps; n += 2) {
    ProtocolTrace trace = analytic_trace(s, n);
    if (trace.converged) return trace;
  }
  return analytic_trace(s, max_steps);
}

namespace {

TrajectoryResult run_trajectory_stream(const SchmidtState& input, int n_steps,
                                       RngStream rng, std::uint64_t seed) {
  const auto [state, swapped] = swap_convention(input);
  const Schedule sched = build_schedule(state, n_steps);
  SchmidtState current = state;
  for (int n = 1; n <= n_steps; ++n) {
    const double eps = sched.epsilons[static_cast<std::size_t>(n - 1)];
    const WeakMeasurement m(eps);
    const double p_success = 0.5 * (1.0 - eps * eps);
    if (rng.uniform01() < p_success) {
      const SchmidtState final_state =
          apply_pure(m, current, Outcome::plus).state;
      return {true, n, final_state, seed};
    }
    current = apply_pure(m, current, Outcome::minus).state;
  }
  if (swapped)
    current = SchmidtState(current.beta(), current.alpha(), input.dim_b());
  return {false, n_steps, current, seed};
}

}  // namespace

TrajectoryResult run_trajectory(const SchmidtState& s, int n_steps,
                                std::uint64_t seed) {
  return run_trajectory_stream(s, n_steps, RngStream(seed, 0), seed);
}

TrajectoryBatchSummary run_trajectory_batch(const SchmidtState& s, int n_steps,
                                            std::uint64_t master_seed,
                                            int n_samples, int n_threads) {
  if (n_samples < 1) throw ConfigError("trajectory batch needs n_samples >= 1");
  std::vector<char> success(static_cast<std::size_t>(n_samples), 0);
  std::vector<int> steps(static_cast<std::size_t>(n_samples), 0);
  parallel_for(n_samples, n_threads, [&](int i) {
    const auto r = run_trajectory_stream(
        s, n_steps, RngStream(master_seed, static_cast<std::uint64_t>(i)),
        master_seed);
    success[static_cast<std::size_t>(i)] = r.success ? 1 : 0;
    steps[static_cast<std::size_t>(i)] = r.steps_used;
  });
  TrajectoryBatchSummary summary{n_samples, 0, 0.0, 0.0};
  long step_sum = 0;
  for (int i = 0; i < n_samples; ++i) {
    if (success[static_cast<std::size_t>(i)]) {
      ++summary.n_success;
      step_sum += steps[static_cast<std::size_t>(i)];
    }
  }
  summary.success_fraction =
      static_cast<double>(summary.n_success) / n_samples;
  summary.mean_steps_to_success =
      summary.n_success > 0
          ? static_cast<double>(step_sum) / summary.n_success
          : 0.0;
  return summary;
}

void write_trace_csv(std::ostream& out, const ProtocolTrace& trace) {
  out << "n,epsilon_n,p_n,p_net_n,p_s_n\n";
  char buf[160];
  for (const auto& step : trace.steps) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", step.n,
                  step.epsilon, step.p, step.p_net, step.p_s);
    out << buf;
  }
}

}  // namespace weakdistill
