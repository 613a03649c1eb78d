#include "weakdistill/runners.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "weakdistill/mixed.hpp"
#include "weakdistill/protocol.hpp"
#include "weakdistill/sampling.hpp"
#include "weakdistill/serialization.hpp"

namespace weakdistill {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Opens the output path, or hands back std::cout when the path is empty.
struct OutputTarget {
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw ConfigError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file ? *file : std::cout; }
  std::unique_ptr<std::ofstream> file;
};

void write_manifest(const std::string& csv_path, json manifest) {
  if (csv_path.empty()) return;
  manifest["version"] = kVersion;
  std::ofstream out(csv_path + ".manifest.json");
  out << manifest.dump(2) << "\n";
}

std::vector<double> interior_grid(int points) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int k = 1; k <= points; ++k)
    grid.push_back(static_cast<double>(k) / (points + 1));
  return grid;
}

ChannelKind parse_channel(const std::string& name) {
  if (name == "dephasing") return ChannelKind::dephasing;
  if (name == "amplitude_damping") return ChannelKind::amplitude_damping;
  if (name == "maximally_mixed") return ChannelKind::maximally_mixed_admixture;
  throw ConfigError("unknown channel: " + name);
}

void write_sweep_rows(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << "s_value,weight,c_before,c_after,sign\n";
  for (const auto& cell : cells) {
    if (cell.valid) {
      out << fmt17(cell.s_value) << ',' << fmt17(cell.weight) << ','
          << fmt17(cell.c_before) << ',' << fmt17(cell.c_after) << ','
          << cell.sign << "\n";
    } else {
      out << fmt17(cell.s_value) << ',' << fmt17(cell.weight) << ",,,\n";
    }
  }
}

}  // namespace

int run_pure(const PureConfig& config, std::ostream& diag) {
  try {
    if (!config.sweep_entropy &&
        (config.alpha_sq < 0.0 || config.alpha_sq > 1.0))
      throw ConfigError("--alpha-sq must lie in [0, 1]");
    OutputTarget target(config.out);
    if (config.sweep_entropy) {
      if (config.points < 1) throw ConfigError("--points must be >= 1");
      target.stream() << "s_value,total_success\n";
      for (double s : interior_grid(config.points)) {
        const double alpha_sq = 0.5 * (1.0 - std::sqrt(1.0 - s));
        const ProtocolTrace trace =
            converged_trace(SchmidtState::from_alpha_sq(alpha_sq));
        target.stream() << fmt17(s) << ',' << fmt17(trace.total_success)
                        << "\n";
      }
    } else {
      if (config.steps < 1) throw ConfigError("--steps must be >= 1");
      const ProtocolTrace trace = analytic_trace(
          SchmidtState::from_alpha_sq(config.alpha_sq), config.steps);
      write_trace_csv(target.stream(), trace);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const AlreadyMaximal& e) {
    diag << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  }
}

int run_trajectory_cmd(const TrajectoryRunConfig& config, std::ostream& diag) {
  try {
    if (config.alpha_sq < 0.0 || config.alpha_sq > 1.0)
      throw ConfigError("--alpha-sq must lie in [0, 1]");
    if (config.samples < 1) throw ConfigError("--samples must be >= 1");
    if (config.steps < 1) throw ConfigError("--steps must be >= 1");

    const auto summary = run_trajectory_batch(
        SchmidtState::from_alpha_sq(config.alpha_sq), config.steps,
        config.seed, config.samples, config.threads);
    const double sf = summary.success_fraction;
    const double sigma =
        std::sqrt(std::max(sf * (1.0 - sf), 0.0) / config.samples);

    // No timing fields here: the output must be byte-identical per seed.
    json out{{"command", "trajectory"},
             {"version", kVersion},
             {"alpha_sq", config.alpha_sq},
             {"steps", config.steps},
             {"samples", config.samples},
             {"seed", config.seed},
             {"n_success", summary.n_success},
             {"success_fraction", sf},
             {"mean_steps_to_success", summary.mean_steps_to_success},
             {"ci_3sigma_low", sf - 3.0 * sigma},
             {"ci_3sigma_high", sf + 3.0 * sigma}};
    OutputTarget target(config.out);
    target.stream() << out.dump(2) << "\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const AlreadyMaximal& e) {
    diag << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  }
}

namespace {

int run_channel_sweep(const MixedSweepConfig& config, std::ostream& diag) {
  const ChannelKind kind = parse_channel(config.channel);
  OutputTarget target(config.out);
  const auto start = std::chrono::steady_clock::now();

  if (config.alpha_sq >= 0.0 || config.u >= 0.0 || config.lambda >= 0.0) {
    // Single-point mode.
    if (config.alpha_sq < 0.0)
      throw ConfigError("single-point mode needs --alpha-sq");
    const SchmidtState s = SchmidtState::from_alpha_sq(config.alpha_sq);
    const double param = (kind == ChannelKind::maximally_mixed_admixture)
                             ? config.lambda
                             : config.u;
    if (param < 0.0)
      throw ConfigError("single-point mode needs --u (channels) or --lambda");
    const LSDecomposition dec = apply_channel({kind, param}, s);
    const SingleShotResult shot = single_shot(dec);
    target.stream() << "s_value,weight,c_before,c_after,sign\n"
                    << fmt17(linear_entropy(dec.pure())) << ','
                    << fmt17(dec.lambda()) << ','
                    << fmt17(shot.concurrence_delta.before) << ','
                    << fmt17(shot.concurrence_delta.after) << ','
                    << shot.concurrence_delta.sign << "\n";
  } else {
    const int grid = config.grid > 0 ? config.grid : 101;
    write_sweep_rows(target.stream(),
                     sweep_channel(kind, grid, grid, config.threads));
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  write_manifest(config.out, json{{"command", "mixed-sweep"},
                                  {"channel", config.channel},
                                  {"grid", config.grid > 0 ? config.grid : 101},
                                  {"elapsed_ms", elapsed}});
  (void)diag;
  return kExitOk;
}

std::string per_asz_path(const std::string& base, std::size_t index,
                         std::size_t total) {
  if (base.empty() || total == 1) return base;
  const auto dot = base.rfind('.');
  const std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
  const std::string ext = dot == std::string::npos ? "" : base.substr(dot);
  return stem + "_asz" + std::to_string(index) + ext;
}

int run_monte_carlo_sweep(const MixedSweepConfig& config, std::ostream& diag) {
  std::vector<double> a_sz_values = config.a_sz_values;
  if (a_sz_values.empty()) a_sz_values = {-0.95, -0.75, -0.55, -0.35};
  const int grid = config.grid > 0 ? config.grid : 41;
  const std::vector<double> s_grid = interior_grid(grid);
  const std::vector<double> lambda_grid = interior_grid(grid);

  json manifest{{"command", "mixed-sweep"},
                {"channel", "monte_carlo"},
                {"seed", config.seed},
                {"samples_per_cell", config.samples},
                {"grid", grid},
                {"a_sz_values", a_sz_values},
                {"criterion_thresholds_s", json::array()},
                {"outputs", json::array()},
                {"budget_exceeded", false}};
  for (double a : a_sz_values)
    manifest["criterion_thresholds_s"].push_back(1.0 - a * a);

  const auto start = std::chrono::steady_clock::now();
  int exit_code = kExitOk;
  for (std::size_t i = 0; i < a_sz_values.size(); ++i) {
    const std::string path = per_asz_path(config.out, i, a_sz_values.size());
    manifest["outputs"].push_back(path);
    OutputTarget target(path);
    try {
      const auto cells =
          monte_carlo_map(a_sz_values[i], s_grid, lambda_grid, config.samples,
                          config.seed, config.threads);
      target.stream()
          << "s_value,lambda,n_samples,mean_c_before,mean_c_after,sign\n";
      for (const auto& cell : cells)
        target.stream() << fmt17(cell.s_value) << ',' << fmt17(cell.lambda)
                        << ',' << cell.n_samples << ','
                        << fmt17(cell.mean_c_before) << ','
                        << fmt17(cell.mean_c_after) << ',' << cell.sign
                        << "\n";
    } catch (const RejectionBudgetExceeded& e) {
      diag << "sampling budget exceeded at A_sz = " << a_sz_values[i] << ": "
           << e.what() << "\n";
      manifest["budget_exceeded"] = true;
      exit_code = kExitBudget;
      break;
    }
  }
  manifest["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  write_manifest(config.out, manifest);
  return exit_code;
}

}  // namespace

int run_mixed_sweep(const MixedSweepConfig& config, std::ostream& diag) {
  try {
    if (config.samples < 1) throw ConfigError("--samples must be >= 1");
    if (config.channel == "monte_carlo")
      return run_monte_carlo_sweep(config, diag);
    return run_channel_sweep(config, diag);
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const AlreadyMaximal& e) {
    diag << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  }
}

}  // namespace weakdistill
