// Command-line front end: emits the protocol traces, entropy sweeps,
// trajectory statistics and mixed-state sign maps as CSV/JSON files.

#include <CLI11.hpp>
#include <iostream>

#include "weakdistill/parallel.hpp"
#include "weakdistill/runners.hpp"

int main(int argc, char** argv) {
  CLI::App app{"weakdistill: entanglement amplification via local weak "
               "measurements"};
  app.set_version_flag("--version", weakdistill::kVersion);
  app.set_config("--config", "", "Flat key=value config file; flags override");
  app.require_subcommand(1);

  const int default_threads = weakdistill::env_thread_count();

  weakdistill::PureConfig pure_cfg;
  auto* pure = app.add_subcommand(
      "pure", "Repeated-weak-measurement protocol for a pure input state");
  pure->add_option("--alpha-sq", pure_cfg.alpha_sq,
                   "Schmidt weight alpha^2 of the input state "
                   "(required unless --sweep-entropy)");
  pure->add_option("--steps", pure_cfg.steps, "Number of measurement steps");
  pure->add_flag("--sweep-entropy", pure_cfg.sweep_entropy,
                 "Emit (S, total_success) over an entropy grid instead");
  pure->add_option("--points", pure_cfg.points, "Entropy grid size");
  pure->add_option("--out", pure_cfg.out, "Output CSV path (default stdout)");

  weakdistill::TrajectoryRunConfig traj_cfg;
  traj_cfg.threads = default_threads;
  auto* traj = app.add_subcommand(
      "trajectory", "Seeded Monte Carlo trajectories of the protocol");
  traj->add_option("--alpha-sq", traj_cfg.alpha_sq, "alpha^2 of the input")
      ->required();
  traj->add_option("--steps", traj_cfg.steps, "Steps per trajectory");
  traj->add_option("--samples", traj_cfg.samples, "Number of trajectories");
  traj->add_option("--seed", traj_cfg.seed, "Master seed")
      ->envname("WEAKDISTILL_SEED");
  traj->add_option("--threads", traj_cfg.threads, "Worker threads");
  traj->add_option("--out", traj_cfg.out, "Summary JSON path (default stdout)");

  weakdistill::MixedSweepConfig mixed_cfg;
  mixed_cfg.threads = default_threads;
  auto* mixed = app.add_subcommand(
      "mixed-sweep", "Mixed-state sign maps and Monte Carlo ensembles");
  mixed->add_option("--channel", mixed_cfg.channel,
                    "dephasing | amplitude_damping | maximally_mixed | "
                    "monte_carlo")
      ->required();
  mixed->add_option("--alpha-sq", mixed_cfg.alpha_sq,
                    "Single-point mode: alpha^2 of the pure input");
  mixed->add_option("--u", mixed_cfg.u, "Single-point mode: channel strength");
  mixed->add_option("--lambda", mixed_cfg.lambda,
                    "Single-point mode: admixture weight");
  mixed->add_option("--a-sz", mixed_cfg.a_sz_values,
                    "Monte Carlo A_{s,z} values (repeatable)");
  mixed->add_option("--grid", mixed_cfg.grid, "Grid points per axis");
  mixed->add_option("--samples", mixed_cfg.samples,
                    "Monte Carlo samples per cell");
  mixed->add_option("--seed", mixed_cfg.seed, "Master seed")
      ->envname("WEAKDISTILL_SEED");
  mixed->add_option("--threads", mixed_cfg.threads, "Worker threads");
  mixed->add_option("--out", mixed_cfg.out, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return weakdistill::kExitConfig;
  }

  if (pure->parsed()) return weakdistill::run_pure(pure_cfg, std::cerr);
  if (traj->parsed())
    return weakdistill::run_trajectory_cmd(traj_cfg, std::cerr);
  return weakdistill::run_mixed_sweep(mixed_cfg, std::cerr);
}
