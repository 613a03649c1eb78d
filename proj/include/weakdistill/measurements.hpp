#pragma once

#include <optional>
#include <utility>

#include "weakdistill/entanglement.hpp"
#include "weakdistill/states.hpp"

namespace weakdistill {

enum class Outcome { plus, minus };

/// Symmetric two-outcome weak measurement on system A,
///   M_pm = sqrt((1 pm eps)/2) |0><0| + sqrt((1 mp eps)/2) |1><1|.
/// Convention: "+" is the operator that boosts the |0> amplitude.
class WeakMeasurement {
 public:
  explicit WeakMeasurement(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

/// Generalized two-outcome measurement,
///   M_1 = sqrt(p)|0><0| + sqrt(q)|1><1|,
///   M_2 = sqrt(1-p)|0><0| + sqrt(1-q)|1><1|.
/// The symmetric family is p = (1+eps)/2, q = (1-eps)/2; the Procrustean
/// partial-collapse pair is the p = 1 (or q = 1) case.
class GeneralizedMeasurement {
 public:
  GeneralizedMeasurement(double p, double q);
  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_;
  double q_;
};

/// Generalized partial measurement,
///   M_{*,pm} = sqrt((1 pm delta0)/2)|0><0| + sqrt((1 pm delta1)/2)|1><1|.
class GeneralizedPartialMeasurement {
 public:
  GeneralizedPartialMeasurement(double delta0, double delta1);
  double delta0() const { return delta0_; }
  double delta1() const { return delta1_; }

 private:
  double delta0_;
  double delta1_;
};

struct PureOutcome {
  SchmidtState state;
  double probability;
};

struct MixedOutcome {
  TwoQubitDensity state;
  double probability;
  std::optional<double> lambda_plus;  // set when the input carried LS form
};

std::pair<Mat2, Mat2> weak_operators(const WeakMeasurement& m);
std::pair<Mat2, Mat2> generalized_operators(const GeneralizedMeasurement& g);
std::pair<Mat2, Mat2> partial_operators(const GeneralizedPartialMeasurement& g);

/// Applies one weak-measurement outcome to a Schmidt-form pure state.
/// The Schmidt form is invariant, so only (alpha, beta) update.
PureOutcome apply_pure(const WeakMeasurement& m, const SchmidtState& s,
                       Outcome outcome);

/// rho_sigma = (M_sigma (x) I2) rho (M_sigma^dag (x) I2) / R_sigma.
MixedOutcome apply_mixed(const WeakMeasurement& m, const TwoQubitDensity& rho,
                         Outcome outcome);

/// As apply_mixed on the reconstructed density matrix, with the separable
/// weight update lambda_sigma = lambda w_{s,sigma} / R_sigma.
MixedOutcome apply_ls(const WeakMeasurement& m, const LSDecomposition& dec,
                      Outcome outcome);

/// Tuning of (p, q) for the generalized measurement against a mixed input
/// with separable-part expectation a_sz: enforces p alpha^2 = q beta^2 and
/// (p - q)(sqrt(1 - S) + a_sz) <= 0, returning the maximal-p solution, or
/// nullopt when the sign condition is infeasible.
std::optional<std::pair<double, double>> generalized_tuning(
    const SchmidtState& s, double a_sz);

/// Pure-input variant: the sign condition is not needed.
std::pair<double, double> generalized_tuning(const SchmidtState& s);

/// Single-shot asymptotic map: delta0 = 1, delta1 = 2 alpha^2/beta^2 - 1,
/// so that M_{*,+}|psi> = sqrt(2) alpha |psi_MES> and the success
/// probability is 2 alpha^2. Requires beta >= alpha > 0.
GeneralizedPartialMeasurement asymptotic_operators(const SchmidtState& s);

}  // namespace weakdistill
