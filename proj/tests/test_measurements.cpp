#include <doctest.h>

#include "test_util.hpp"
#include "weakdistill/measurements.hpp"

using namespace weakdistill;

namespace {

double completeness_defect(const Mat2& a, const Mat2& b) {
  return (a.adjoint() * a + b.adjoint() * b - Mat2::Identity())
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace

TEST_CASE("weak_operators endpoints and arithmetic") {
  auto [p0, m0] = weak_operators(WeakMeasurement(0.0));
  CHECK((p0 - identity2() / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((m0 - identity2() / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);

  auto [p1, m1] = weak_operators(WeakMeasurement(1.0));
  CHECK(p1(0, 0).real() == doctest::Approx(1.0));
  CHECK(p1(1, 1).real() == doctest::Approx(0.0));
  CHECK(m1(0, 0).real() == doctest::Approx(0.0));
  CHECK(m1(1, 1).real() == doctest::Approx(1.0));

  auto [p, m] = weak_operators(WeakMeasurement(0.2));
  CHECK(p(0, 0).real() == doctest::Approx(std::sqrt(0.6)).epsilon(1e-14));
  CHECK(p(1, 1).real() == doctest::Approx(std::sqrt(0.4)).epsilon(1e-14));
  CHECK(m(0, 0).real() == doctest::Approx(std::sqrt(0.4)).epsilon(1e-14));
  CHECK(m(1, 1).real() == doctest::Approx(std::sqrt(0.6)).epsilon(1e-14));
}

TEST_CASE("completeness across all measurement families") {
  RngStream rng(41, 0);
  for (int trial = 0; trial < 200; ++trial) {
    auto [wp, wm] = weak_operators(WeakMeasurement(rng.uniform01()));
    CHECK(completeness_defect(wp, wm) < tol::completeness);

    auto [g1, g2] = generalized_operators(
        GeneralizedMeasurement(rng.uniform01(), rng.uniform01()));
    CHECK(completeness_defect(g1, g2) < tol::completeness);

    auto [a1, a2] = partial_operators(
        GeneralizedPartialMeasurement(rng.uniform_sym(), rng.uniform_sym()));
    CHECK(completeness_defect(a1, a2) < tol::completeness);
  }
}

TEST_CASE("apply_pure at the tuned strength yields the Bell state") {
  const SchmidtState s = SchmidtState::from_alpha_sq(0.4);
  const double eps = 0.6 - 0.4;  // beta^2 - alpha^2
  const auto outcome = apply_pure(WeakMeasurement(eps), s, Outcome::plus);
  CHECK(outcome.state.alpha() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(outcome.state.beta() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(outcome.probability ==
        doctest::Approx((1.0 - eps * eps) / 2.0).epsilon(1e-12));
}

TEST_CASE("apply_pure arithmetic and normalization") {
  const SchmidtState s = SchmidtState::from_alpha_sq(0.4);

  const auto unchanged = apply_pure(WeakMeasurement(0.0), s, Outcome::plus);
  CHECK(unchanged.state.alpha() == doctest::Approx(s.alpha()).epsilon(1e-14));
  CHECK(unchanged.probability == doctest::Approx(0.5).epsilon(1e-14));

  const auto minus = apply_pure(WeakMeasurement(0.2), s, Outcome::minus);
  CHECK(minus.probability == doctest::Approx(0.52).epsilon(1e-14));
  CHECK(minus.state.alpha() * minus.state.alpha() ==
        doctest::Approx(0.4 * 0.4 / 0.52).epsilon(1e-12));
  const auto plus = apply_pure(WeakMeasurement(0.2), s, Outcome::plus);
  CHECK(plus.probability + minus.probability ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("apply_pure rejects a vanishing outcome") {
  CHECK_THROWS_AS(
      apply_pure(WeakMeasurement(1.0), SchmidtState(1.0, 0.0), Outcome::minus),
      ZeroProbabilityOutcome);
}

TEST_CASE("apply_mixed on diagonal and Bell inputs") {
  const auto mixed = apply_mixed(WeakMeasurement(0.2),
                                 TwoQubitDensity::maximally_mixed(),
                                 Outcome::plus);
  CHECK(mixed.probability == doctest::Approx(0.5).epsilon(1e-14));
  const Mat4 d = mixed.state.matrix();
  CHECK(d(0, 0).real() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(d(1, 1).real() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(d(2, 2).real() == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(d(3, 3).real() == doctest::Approx(0.2).epsilon(1e-14));

  const auto bell = apply_mixed(WeakMeasurement(0.0),
                                TwoQubitDensity(wdtest::bell_projector()),
                                Outcome::plus);
  CHECK(bell.probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK((bell.state.matrix() - wdtest::bell_projector())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("pure and mixed representations stay consistent") {
  RngStream rng(42, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const SchmidtState s = SchmidtState::from_alpha_sq(
        0.05 + 0.9 * rng.uniform01());
    const WeakMeasurement m(rng.uniform01() * 0.95);
    for (Outcome o : {Outcome::plus, Outcome::minus}) {
      const auto pure = apply_pure(m, s, o);
      const auto mixed = apply_mixed(m, schmidt_to_density(s), o);
      CHECK(std::abs(pure.probability - mixed.probability) < 1e-12);
      CHECK((schmidt_to_density(pure.state).matrix() - mixed.state.matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("unconditioned map preserves the trace") {
  RngStream rng(43, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitDensity rho(wdtest::random_density(rng));
    auto [mp, mm] = weak_operators(WeakMeasurement(rng.uniform01()));
    const Mat4 opp = kron(mp, identity2());
    const Mat4 opm = kron(mm, identity2());
    const Mat4 total = opp * rho.matrix() * opp.adjoint() +
                       opm * rho.matrix() * opm.adjoint();
    CHECK(std::abs(total.trace().real() - 1.0) < tol::completeness);

    const auto plus = apply_mixed(WeakMeasurement(0.3), rho, Outcome::plus);
    const auto minus = apply_mixed(WeakMeasurement(0.3), rho, Outcome::minus);
    CHECK(std::abs(plus.probability + minus.probability - 1.0) <
          tol::completeness);
  }
}

TEST_CASE("ensemble-average concurrence never increases") {
  RngStream rng(44, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitDensity rho(wdtest::random_density(rng));
    const WeakMeasurement m(rng.uniform01() * 0.98);
    const auto plus = apply_mixed(m, rho, Outcome::plus);
    const auto minus = apply_mixed(m, rho, Outcome::minus);
    const double avg = plus.probability * concurrence(plus.state) +
                       minus.probability * concurrence(minus.state);
    CHECK(avg <= concurrence(rho) + tol::zero_band);
  }
}

TEST_CASE("apply_ls weight update") {
  const SchmidtState s = SchmidtState::from_alpha_sq(0.4);
  const TwoQubitDensity mixed = TwoQubitDensity::maximally_mixed();
  const WeakMeasurement m(0.2);

  const auto zero = apply_ls(m, LSDecomposition(0.0, mixed, s), Outcome::plus);
  CHECK(*zero.lambda_plus == doctest::Approx(0.0));
  const auto one = apply_ls(m, LSDecomposition(1.0, mixed, s), Outcome::plus);
  CHECK(*one.lambda_plus == doctest::Approx(1.0).epsilon(1e-12));

  // w_{s,+} = 0.5, R_+ = 0.5*0.5 + 0.5*0.48 = 0.49, lambda_+ = 0.25/0.49.
  const auto half = apply_ls(m, LSDecomposition(0.5, mixed, s), Outcome::plus);
  CHECK(half.probability == doctest::Approx(0.49).epsilon(1e-12));
  CHECK(*half.lambda_plus == doctest::Approx(0.25 / 0.49).epsilon(1e-12));
  CHECK(*half.lambda_plus > 0.5);  // criterion fails at A_{s,z} = 0
}

TEST_CASE("generalized_operators special cases") {
  auto [e1, e2] = generalized_operators(GeneralizedMeasurement(0.5, 0.5));
  CHECK((e1 - identity2() / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((e2 - identity2() / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);

  // Procrustean partial-collapse pair (p = 1 case).
  auto [k1, k2] = generalized_operators(GeneralizedMeasurement(1.0, 0.8));
  CHECK(k1(0, 0).real() == doctest::Approx(1.0));
  CHECK(k2(0, 0).real() == doctest::Approx(0.0));
  CHECK(k2(1, 1).real() ==
        doctest::Approx(std::sqrt(0.2)).epsilon(1e-12));

  // p = (1+eps)/2, q = (1-eps)/2 reproduces the weak pair.
  auto [g1, g2] = generalized_operators(GeneralizedMeasurement(0.6, 0.4));
  auto [w1, w2] = weak_operators(WeakMeasurement(0.2));
  CHECK((g1 - w1).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((g2 - w2).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("generalized_tuning feasibility") {
  const SchmidtState s = SchmidtState::from_alpha_sq(0.4);

  const auto feasible = generalized_tuning(s, -1.0);
  REQUIRE(feasible.has_value());
  CHECK(feasible->first == doctest::Approx(1.0));
  CHECK(feasible->second == doctest::Approx(0.4 / 0.6).epsilon(1e-12));

  // Sign condition violated: beta > alpha forces p > q but the gap is > 0.
  CHECK_FALSE(generalized_tuning(s, 0.5).has_value());

  // Pure-input variant skips the sign condition.
  const auto pure = generalized_tuning(s);
  CHECK(pure.first == doctest::Approx(1.0));
  CHECK(pure.second == doctest::Approx(0.4 / 0.6).epsilon(1e-12));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto balanced = generalized_tuning(SchmidtState(inv_sqrt2, inv_sqrt2),
                                           0.3);
  REQUIRE(balanced.has_value());
  CHECK(balanced->first == 1.0);
  CHECK(balanced->second == 1.0);

  // Mirrored ordering: alpha > beta needs the gap >= 0.
  const SchmidtState mirrored = SchmidtState::from_alpha_sq(0.6);
  const auto m = generalized_tuning(mirrored, 0.5);
  REQUIRE(m.has_value());
  CHECK(m->first == doctest::Approx(0.4 / 0.6).epsilon(1e-12));
  CHECK(m->second == doctest::Approx(1.0));
  CHECK_FALSE(generalized_tuning(mirrored, -0.5).has_value());

  // The tuned pair satisfies p alpha^2 = q beta^2 and completeness.
  auto [op1, op2] = generalized_operators(
      GeneralizedMeasurement(feasible->first, feasible->second));
  CHECK(completeness_defect(op1, op2) < tol::completeness);
  CHECK(feasible->first * 0.4 ==
        doctest::Approx(feasible->second * 0.6).epsilon(1e-12));
}

TEST_CASE("asymptotic_operators produce the Bell state with P* = 2 alpha^2") {
  for (double a2 : {0.4, 0.1, 0.25}) {
    const SchmidtState s = SchmidtState::from_alpha_sq(a2);
    const auto g = asymptotic_operators(s);
    CHECK(g.delta0() == 1.0);
    CHECK(g.delta1() ==
          doctest::Approx(2.0 * a2 / (1.0 - a2) - 1.0).epsilon(1e-12));

    auto [plus, minus] = partial_operators(g);
    const Vec v = s.vector();
    const Vec after = kron(plus, identity2()) * v;
    const double norm_sq = after.squaredNorm();
    CHECK(norm_sq == doctest::Approx(2.0 * a2).epsilon(1e-12));
    // Renormalized output is the maximally-entangled state.
    CHECK(std::abs(after(0)) ==
          doctest::Approx(std::abs(after(3))).epsilon(1e-12));
    const Vec rest = kron(minus, identity2()) * v;
    CHECK(norm_sq + rest.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  }

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto balanced = asymptotic_operators(SchmidtState(inv_sqrt2, inv_sqrt2));
  CHECK(balanced.delta1() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(asymptotic_operators(SchmidtState::from_alpha_sq(0.6)),
                  OrderingViolation);
}
