#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace weakdistill {

inline constexpr const char* kVersion = "0.1.0";

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitBudget = 4;

struct PureConfig {
  double alpha_sq = -1.0;
  int steps = 40;
  bool sweep_entropy = false;
  int points = 99;
  std::string out;  // empty writes to stdout
};

struct TrajectoryRunConfig {
  double alpha_sq = -1.0;
  int steps = 40;
  int samples = 100000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
};

struct MixedSweepConfig {
  std::string channel;  // dephasing | amplitude_damping | maximally_mixed | monte_carlo
  double alpha_sq = -1.0;  // single-point mode when both alpha_sq and u set
  double u = -1.0;
  double lambda = -1.0;
  std::vector<double> a_sz_values;  // monte_carlo mode
  int grid = 0;  // 0 selects the per-mode default (101 channel, 41 monte carlo)
  int samples = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
};

int run_pure(const PureConfig& config, std::ostream& diag);
int run_trajectory_cmd(const TrajectoryRunConfig& config, std::ostream& diag);
int run_mixed_sweep(const MixedSweepConfig& config, std::ostream& diag);

}  // namespace weakdistill
