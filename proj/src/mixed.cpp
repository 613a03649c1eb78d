#include "weakdistill/mixed.hpp"

#include <cmath>

#include "weakdistill/parallel.hpp"
#include "weakdistill/protocol.hpp"

namespace weakdistill {

std::pair<Mat2, Mat2> amplitude_damping_kraus(double u) {
  if (u < 0.0 || u > 1.0) throw ConfigError("amplitude-damping u must lie in [0, 1]");
  Mat2 e1 = Mat2::Zero();
  e1(0, 0) = 1.0;
  e1(1, 1) = std::sqrt(u);
  Mat2 e2 = Mat2::Zero();
  e2(0, 1) = std::sqrt(1.0 - u);
  return {e1, e2};
}

LSDecomposition apply_channel(const ChannelSpec& spec, const SchmidtState& s) {
  if (s.dim_b() != 2)
    throw DimensionMismatch("channels act on two-qubit states only");
  const double a2 = s.alpha() * s.alpha();
  const double b2 = s.beta() * s.beta();

  switch (spec.kind) {
    case ChannelKind::dephasing: {
      const double u = spec.parameter;
      if (u < 0.0 || u > 0.5) throw ConfigError("dephasing u must lie in [0, 1/2]");
      Mat4 rho_s = Mat4::Zero();
      rho_s(0, 0) = a2;
      rho_s(3, 3) = b2;
      // lambda = 1 - mu/(alpha beta) = 2u, independent of alpha, beta.
      return LSDecomposition(2.0 * u, TwoQubitDensity(rho_s), s);
    }
    case ChannelKind::amplitude_damping: {
      const double u = spec.parameter;
      if (u < 0.0 || u > 1.0) throw ConfigError("amplitude-damping u must lie in [0, 1]");
      const double weight = (1.0 - u) * b2;
      const double rest = 1.0 - weight;  // = alpha^2 + u beta^2
      if (rest <= tol::probability_floor)
        throw InvalidState("amplitude-damping output has no pure part");
      Mat4 rho_s = Mat4::Zero();
      rho_s(1, 1) = 1.0;  // |01><01|
      const SchmidtState pure(s.alpha() / std::sqrt(rest),
                              std::sqrt(u) * s.beta() / std::sqrt(rest), 2);
      return LSDecomposition(weight, TwoQubitDensity(rho_s), pure);
    }
    case ChannelKind::maximally_mixed_admixture: {
      const double lambda = spec.parameter;
      if (lambda < 0.0 || lambda > 1.0)
        throw ConfigError("admixture lambda must lie in [0, 1]");
      return LSDecomposition(lambda, TwoQubitDensity::maximally_mixed(), s);
    }
  }
  throw ConfigError("unknown channel kind");
}

double a_sz(const TwoQubitDensity& rho_s) {
  const Mat4 op = kron(pauli_z(), identity2());
  return (op * rho_s.matrix()).trace().real();
}

CriterionReport criterion(const LSDecomposition& dec) {
  const auto [pure, swapped] = swap_convention(dec.pure());
  const double threshold =
      pure.alpha() * pure.alpha() - pure.beta() * pure.beta();
  double value = a_sz(dec.separable());
  // In the mirrored convention (alpha > beta) the roles of |0> and |1> are
  // exchanged, which flips the sign of A_{s,z}.
  if (swapped) value = -value;
  const bool satisfied = value <= threshold + tol::degenerate;
  return {value, threshold, satisfied};
}

SingleShotResult single_shot(const LSDecomposition& dec) {
  const double eps = initial_strength(dec.pure());
  const bool mirrored = dec.pure().alpha() > dec.pure().beta();
  const WeakMeasurement m(eps);
  const Outcome success = mirrored ? Outcome::minus : Outcome::plus;

  const double before = concurrence(ls_to_density(dec));
  MixedOutcome out = apply_ls(m, dec, success);
  const double after = concurrence(out.state);
  const double delta = after - before;
  const int sign = std::abs(delta) <= tol::zero_band ? 0 : (delta > 0 ? 1 : -1);
  return {std::move(out), {before, after, delta, sign}};
}

std::vector<RepeatedDephasingStep> repeated_dephasing(const SchmidtState& s,
                                                      double u, int n_steps) {
  if (n_steps < 1) throw ConfigError("repeated_dephasing needs n_steps >= 1");
  const auto [state, swapped] = swap_convention(s);
  const Schedule sched = build_schedule(state, n_steps);
  const Outcome success = swapped ? Outcome::minus : Outcome::plus;
  const Outcome failure = swapped ? Outcome::plus : Outcome::minus;

  TwoQubitDensity rho =
      ls_to_density(apply_channel({ChannelKind::dephasing, u}, s));
  std::vector<RepeatedDephasingStep> steps;
  steps.reserve(static_cast<std::size_t>(n_steps));
  for (int n = 1; n <= n_steps; ++n) {
    const double eps = sched.epsilons[static_cast<std::size_t>(n - 1)];
    // Near saturation the absolute roundoff in eps (~1e-16) becomes
    // comparable to the conditional state's population gap, and the success
    // concurrence drifts by ~1e-16/(1 - eps^2). Stop while that error is
    // still well below the 1e-10 closed-form tolerance.
    if (1.0 - eps * eps < 1e-5) break;
    const WeakMeasurement m(eps);
    const double c_success = concurrence(apply_mixed(m, rho, success).state);
    rho = apply_mixed(m, rho, failure).state;
    steps.push_back({concurrence(rho), c_success});
  }
  return steps;
}

SweepCell channel_cell(ChannelKind kind, double s_value, double weight) {
  SweepCell cell{s_value, weight, 0.0, 0.0, 0, false};
  if (s_value <= 0.0 || s_value >= 1.0 || weight <= 0.0 || weight >= 1.0)
    return cell;
  // beta > alpha branch of S = 4 alpha^2 beta^2.
  const double pure_alpha_sq = 0.5 * (1.0 - std::sqrt(1.0 - s_value));

  LSDecomposition dec = [&] {
    switch (kind) {
      case ChannelKind::dephasing:
        return apply_channel({ChannelKind::dephasing, weight / 2.0},
                             SchmidtState::from_alpha_sq(pure_alpha_sq));
      case ChannelKind::maximally_mixed_admixture:
        return apply_channel({ChannelKind::maximally_mixed_admixture, weight},
                             SchmidtState::from_alpha_sq(pure_alpha_sq));
      case ChannelKind::amplitude_damping: {
        // Axes are (S(psi~), (1-u) beta^2); invert for the pre-channel
        // (alpha, u). pure_alpha_sq here is alpha~^2 of the damped pure part.
        const double alpha_sq = pure_alpha_sq * (1.0 - weight);
        const double u = (1.0 - pure_alpha_sq) * (1.0 - weight) /
                         (1.0 - pure_alpha_sq * (1.0 - weight));
        return apply_channel({ChannelKind::amplitude_damping, u},
                             SchmidtState::from_alpha_sq(alpha_sq));
      }
    }
    throw ConfigError("unknown channel kind");
  }();

  const SingleShotResult result = single_shot(dec);
  cell.c_before = result.concurrence_delta.before;
  cell.c_after = result.concurrence_delta.after;
  cell.sign = result.concurrence_delta.sign;
  cell.valid = true;
  return cell;
}

std::vector<SweepCell> sweep_channel(ChannelKind kind, int s_points,
                                     int weight_points, int n_threads) {
  if (s_points < 1 || weight_points < 1)
    throw ConfigError("sweep grids need at least one point per axis");
  std::vector<SweepCell> cells(
      static_cast<std::size_t>(s_points) * weight_points);
  parallel_for(s_points * weight_points, n_threads, [&](int idx) {
    const int i = idx / weight_points;
    const int j = idx % weight_points;
    const double s = static_cast<double>(i + 1) / (s_points + 1);
    const double w = static_cast<double>(j + 1) / (weight_points + 1);
    cells[static_cast<std::size_t>(idx)] = channel_cell(kind, s, w);
  });
  return cells;
}

}  // namespace weakdistill
