#pragma once

#include <vector>

#include "weakdistill/measurements.hpp"

namespace weakdistill {

enum class ChannelKind { dephasing, amplitude_damping, maximally_mixed_admixture };

/// One-parameter noise channel acting on system A before the protocol:
/// dephasing (u in [0, 1/2]), amplitude damping (u in [0, 1]) or direct
/// admixture of the maximally-mixed state (lambda in [0, 1]).
struct ChannelSpec {
  ChannelKind kind;
  double parameter;  // u for the two channels, lambda for the admixture
};

/// Kraus pair of the amplitude-damping channel:
/// E1 = |0><0| + sqrt(u)|1><1|, E2 = sqrt(1-u)|0><1|.
std::pair<Mat2, Mat2> amplitude_damping_kraus(double u);

/// Output of the channel in LS form. For dephasing the separable part is
/// alpha^2|00><00| + beta^2|11><11| with lambda = 1 - mu/(alpha beta),
/// mu = alpha beta (1 - 2u); for amplitude damping it is |01><01| with
/// lambda = (1-u) beta^2 and a re-normalized pure part psi~; for the
/// admixture it is I4/4 with the given lambda.
LSDecomposition apply_channel(const ChannelSpec& spec, const SchmidtState& s);

/// A_{s,z} = tr[(sigma_z (x) I2) rho_s].
double a_sz(const TwoQubitDensity& rho_s);

struct CriterionReport {
  double a_sz;
  double threshold;  // alpha^2 - beta^2 = -sqrt(1 - S(psi))
  bool satisfied;
};

/// Amplification criterion A_{s,z} <= alpha^2 - beta^2, evaluated on the
/// separable part against the pure part. Inputs with alpha > beta are
/// mirrored into the beta > alpha convention first (which flips the sign
/// of both A_{s,z} and the threshold), so the reported pair always obeys
/// satisfied <=> a_sz <= threshold.
CriterionReport criterion(const LSDecomposition& dec);

struct ConcurrenceDelta {
  double before;
  double after;
  double delta;
  int sign;  // -1/0/+1 with the tol::zero_band dead zone
};

struct SingleShotResult {
  MixedOutcome plus;
  ConcurrenceDelta concurrence_delta;
};

/// One weak measurement at eps = beta^2 - alpha^2 of the pure part, keeping
/// the "+" outcome.
SingleShotResult single_shot(const LSDecomposition& dec);

struct RepeatedDephasingStep {
  double c_fail;     // concurrence after n consecutive failures
  double c_success;  // concurrence of the success state at step n
};

/// Repeated protocol on the dephased state; the success concurrence stays
/// at mu/(alpha beta) for every emitted step. Stops early (returning fewer
/// than n_steps entries) once the strength schedule approaches saturation
/// (1 - eps^2 < 1e-5), beyond which double-precision roundoff in eps
/// dominates the conditional state's population gap.
std::vector<RepeatedDephasingStep> repeated_dephasing(const SchmidtState& s,
                                                      double u, int n_steps);

struct SweepCell {
  double s_value;  // linear entropy of the pure part
  double weight;   // separable-part weight (channel-specific meaning)
  double c_before;
  double c_after;
  int sign;
  bool valid;
};

/// Sign map over a uniform (S, weight) grid in (0,1) x (0,1), one row per
/// cell in row-major (s, weight) order. For amplitude damping the axes are
/// (S(psi~), (1-u) beta^2) and (alpha, u) are recovered from them; grid
/// points with no solution are emitted with valid = false.
std::vector<SweepCell> sweep_channel(ChannelKind kind, int s_points,
                                     int weight_points, int n_threads = 1);

/// Solves the dephasing/admixture grids directly; exposed for tests.
SweepCell channel_cell(ChannelKind kind, double s_value, double weight);

}  // namespace weakdistill
