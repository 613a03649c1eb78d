#include <doctest.h>

#include "test_util.hpp"
#include "weakdistill/entanglement.hpp"
#include "weakdistill/sampling.hpp"

using namespace weakdistill;

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(42, 0);
  RngStream b(42, 0);
  RngStream c(42, 1);
  CHECK(a.next_u64() == b.next_u64());
  RngStream a2(42, 0);
  RngStream c2(42, 1);
  CHECK(a2.next_u64() != c2.next_u64());
}

TEST_CASE("uniform draws pass a chi-square uniformity test") {
  RngStream rng(4242, 3);
  constexpr int kBins = 100;
  constexpr int kDraws = 1000000;
  std::vector<int> bins(kBins, 0);
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform01();
    CHECK_UNARY(u >= 0.0);
    CHECK_UNARY(u < 1.0);
    ++bins[static_cast<std::size_t>(u * kBins)];
  }
  const double expected = static_cast<double>(kDraws) / kBins;
  double chi2 = 0.0;
  for (int count : bins) {
    const double d = count - expected;
    chi2 += d * d / expected;
  }
  // 99 dof; p > 0.001 needs chi2 below ~148.2.
  CHECK(chi2 < 148.2);
}

TEST_CASE("separable_matrix at zero parameters is maximally mixed") {
  SeparableParams params;
  params.a.setZero();
  params.b.setZero();
  params.c.setZero();
  const Mat4 m = separable_matrix(params);
  CHECK((m - Mat4::Identity() * 0.25).cwiseAbs().maxCoeff() == 0.0);
  CHECK(positivity_check(m));
  CHECK(ppt_check(m));
}

TEST_CASE("sample_separable fixes A_sz exactly and is deterministic") {
  const SeparableParams p1 = sample_separable(-0.4, 2024);
  const SeparableParams p2 = sample_separable(-0.4, 2024);
  CHECK(p1.a == p2.a);
  CHECK(p1.b == p2.b);
  CHECK(p1.c == p2.c);

  for (double target : {0.0, -0.4, -0.95}) {
    const SeparableParams params = sample_separable(target, 7);
    const Mat4 m = separable_matrix(params);
    const double measured =
        (kron(pauli_z(), identity2()) * m).trace().real();
    CHECK(measured == doctest::Approx(target).epsilon(1e-12));
    CHECK(positivity_check(m));
    CHECK(ppt_check(m));
  }
}

TEST_CASE("accepted samples have zero concurrence") {
  RngStream rng(314, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const SeparableParams params = sample_separable(-0.3, rng);
    const double c = concurrence(TwoQubitDensity(separable_matrix(params)));
    CHECK(c <= tol::zero_band);
  }
}

TEST_CASE("monte_carlo_map basic behavior") {
  const std::vector<double> s_grid = {0.3, 0.96};
  const std::vector<double> lambda_grid = {0.05, 0.5};
  const auto cells = monte_carlo_map(-0.3, s_grid, lambda_grid, 40, 99, 1);
  REQUIRE(cells.size() == 4);

  // Row-major (s, lambda) ordering.
  CHECK(cells[0].s_value == 0.3);
  CHECK(cells[0].lambda == 0.05);
  CHECK(cells[1].lambda == 0.5);
  for (const auto& cell : cells) {
    CHECK(cell.n_samples == 40);
    CHECK(cell.a_sz == -0.3);
  }

  // Near-pure rows always amplify.
  CHECK(cells[0].sign == 1);
  CHECK(cells[2].sign == 1);

  // Criterion region: S = 0.96 > 1 - 0.3^2 = 0.91 guarantees no loss.
  CHECK(cells[3].mean_c_after >= cells[3].mean_c_before - 1e-9);

  // Parallel execution reproduces the sequential map exactly.
  const auto parallel = monte_carlo_map(-0.3, s_grid, lambda_grid, 40, 99, 4);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells[i].mean_c_before == parallel[i].mean_c_before);
    CHECK(cells[i].mean_c_after == parallel[i].mean_c_after);
    CHECK(cells[i].sign == parallel[i].sign);
  }
}

TEST_CASE("amplification region grows as A_sz decreases") {
  // Qualitative trend on a small grid: count of +1 cells is non-increasing
  // in A_sz (5% slack on the cell count).
  std::vector<double> s_grid, lambda_grid;
  for (int i = 1; i <= 6; ++i) s_grid.push_back(i / 7.0);
  for (int j = 1; j <= 6; ++j) lambda_grid.push_back(j / 7.0);

  std::vector<int> plus_counts;
  for (double a : {-0.6, -0.2, 0.2, 0.6}) {
    const auto cells = monte_carlo_map(a, s_grid, lambda_grid, 60, 5, 4);
    int plus = 0;
    for (const auto& cell : cells) plus += cell.sign == 1;
    plus_counts.push_back(plus);
  }
  const int slack = static_cast<int>(0.05 * 36) + 1;
  for (std::size_t i = 1; i < plus_counts.size(); ++i)
    CHECK(plus_counts[i] <= plus_counts[i - 1] + slack);
}
