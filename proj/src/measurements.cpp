#include "weakdistill/measurements.hpp"

#include <algorithm>
#include <cmath>

namespace weakdistill {

namespace {

Mat2 diag2(double a, double b) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

WeakMeasurement::WeakMeasurement(double epsilon) : epsilon_(epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw InvalidState("measurement strength must lie in [0, 1]");
}

GeneralizedMeasurement::GeneralizedMeasurement(double p, double q)
    : p_(p), q_(q) {
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
    throw InvalidState("p and q must lie in [0, 1]");
}

GeneralizedPartialMeasurement::GeneralizedPartialMeasurement(double delta0,
                                                             double delta1)
    : delta0_(delta0), delta1_(delta1) {
  if (std::abs(delta0) > 1.0 || std::abs(delta1) > 1.0)
    throw InvalidState("delta0 and delta1 must lie in [-1, 1]");
}

std::pair<Mat2, Mat2> weak_operators(const WeakMeasurement& m) {
  const double e = m.epsilon();
  return {diag2(std::sqrt((1.0 + e) / 2.0), std::sqrt((1.0 - e) / 2.0)),
          diag2(std::sqrt((1.0 - e) / 2.0), std::sqrt((1.0 + e) / 2.0))};
}

std::pair<Mat2, Mat2> generalized_operators(const GeneralizedMeasurement& g) {
  return {diag2(std::sqrt(g.p()), std::sqrt(g.q())),
          diag2(std::sqrt(1.0 - g.p()), std::sqrt(1.0 - g.q()))};
}

std::pair<Mat2, Mat2> partial_operators(const GeneralizedPartialMeasurement& g) {
  return {diag2(std::sqrt((1.0 + g.delta0()) / 2.0),
                std::sqrt((1.0 + g.delta1()) / 2.0)),
          diag2(std::sqrt((1.0 - g.delta0()) / 2.0),
                std::sqrt((1.0 - g.delta1()) / 2.0))};
}

PureOutcome apply_pure(const WeakMeasurement& m, const SchmidtState& s,
                       Outcome outcome) {
  const double e = (outcome == Outcome::plus) ? m.epsilon() : -m.epsilon();
  const double a = s.alpha() * std::sqrt((1.0 + e) / 2.0);
  const double b = s.beta() * std::sqrt((1.0 - e) / 2.0);
  const double prob = a * a + b * b;
  if (prob <= tol::probability_floor)
    throw ZeroProbabilityOutcome("requested outcome has vanishing probability");
  const double norm = std::sqrt(prob);
  return {SchmidtState(a / norm, b / norm, s.dim_b()), prob};
}

MixedOutcome apply_mixed(const WeakMeasurement& m, const TwoQubitDensity& rho,
                         Outcome outcome) {
  auto [m_plus, m_minus] = weak_operators(m);
  const Mat4 op = kron(outcome == Outcome::plus ? m_plus : m_minus, identity2());
  const Mat4 numerator = op * rho.matrix() * op.adjoint();
  const double r = numerator.trace().real();
  if (r <= tol::probability_floor)
    throw ZeroProbabilityOutcome("requested outcome has vanishing probability");
  return {TwoQubitDensity(numerator / r), r, std::nullopt};
}

MixedOutcome apply_ls(const WeakMeasurement& m, const LSDecomposition& dec,
                      Outcome outcome) {
  MixedOutcome out = apply_mixed(m, ls_to_density(dec), outcome);
  auto [m_plus, m_minus] = weak_operators(m);
  const Mat2& op = (outcome == Outcome::plus) ? m_plus : m_minus;
  const Mat4 povm = kron(op.adjoint() * op, identity2());
  const double w_s = (povm * dec.separable().matrix()).trace().real();
  out.lambda_plus = std::clamp(dec.lambda() * w_s / out.probability, 0.0, 1.0);
  return out;
}

std::optional<std::pair<double, double>> generalized_tuning(
    const SchmidtState& s, double a_sz) {
  const double a2 = s.alpha() * s.alpha();
  const double b2 = s.beta() * s.beta();
  if (a2 <= 0.0 || b2 <= 0.0)
    throw InvalidState("generalized_tuning requires alpha, beta > 0");
  if (std::abs(a2 - b2) <= tol::degenerate) return std::make_pair(1.0, 1.0);

  const double gap = std::sqrt(1.0 - linear_entropy(s)) + a_sz;
  if (b2 > a2) {
    // p alpha^2 = q beta^2 forces p > q; need gap <= 0.
    if (gap > tol::degenerate) return std::nullopt;
    return std::make_pair(1.0, a2 / b2);
  }
  // alpha > beta forces q > p; need gap >= 0.
  if (gap < -tol::degenerate) return std::nullopt;
  return std::make_pair(b2 / a2, 1.0);
}

std::pair<double, double> generalized_tuning(const SchmidtState& s) {
  const double a2 = s.alpha() * s.alpha();
  const double b2 = s.beta() * s.beta();
  if (a2 <= 0.0 || b2 <= 0.0)
    throw InvalidState("generalized_tuning requires alpha, beta > 0");
  if (std::abs(a2 - b2) <= tol::degenerate) return {1.0, 1.0};
  return (b2 > a2) ? std::make_pair(1.0, a2 / b2)
                   : std::make_pair(b2 / a2, 1.0);
}

GeneralizedPartialMeasurement asymptotic_operators(const SchmidtState& s) {
  const double a2 = s.alpha() * s.alpha();
  const double b2 = s.beta() * s.beta();
  if (s.alpha() <= 0.0)
    throw OrderingViolation("asymptotic_operators requires alpha > 0");
  if (b2 < a2 - tol::degenerate)
    throw OrderingViolation("asymptotic_operators requires beta >= alpha");
  const double delta1 = std::min(2.0 * a2 / b2 - 1.0, 1.0);
  return GeneralizedPartialMeasurement(1.0, delta1);
}

}  // namespace weakdistill
