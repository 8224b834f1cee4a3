#include <doctest.h>

#include <cmath>
#include <vector>

#include "irreps/hadamard.hpp"
#include "irreps/symrep.hpp"
#include "test_util.hpp"

using namespace irreps;

TEST_CASE("shot plan honors the confidence bound") {
  CHECK(hoeffding_shots(0.05, 0.01) == 4239);
  CHECK(hoeffding_floor_shots(0.05, 0.01) == 1060);
  const ShotPlan plan = make_shot_plan(0.1, 0.05, OverlapPart::real);
  CHECK(plan.shots == hoeffding_shots(0.1, 0.05));
  CHECK_THROWS_AS(make_shot_plan(0.0, 0.5, OverlapPart::real), std::invalid_argument);
  CHECK_THROWS_AS(make_shot_plan(0.5, 1.5, OverlapPart::real), std::invalid_argument);
}

TEST_CASE("overlap basics") {
  const DenseMatrix id = DenseMatrix::identity(3);
  std::vector<cplx> psi{1.0, 0.0, 0.0};
  CHECK(overlap(id, psi) == cplx(1.0, 0.0));
  DenseMatrix minus = id;
  minus *= cplx(-1.0);
  CHECK(overlap(minus, psi) == cplx(-1.0, 0.0));
  std::vector<cplx> unnormalized{1.0, 1.0, 0.0};
  CHECK_THROWS_AS(overlap(id, unnormalized), std::invalid_argument);

  // Diagonal representation element of (2,1) at sigma_2.
  const YoungDiagram shape{{2, 1}};
  const DenseMatrix rep = rep_permutation(shape, Permutation{{1, 3, 2}}).matrix();
  std::vector<cplx> first{1.0, 0.0};
  CHECK(overlap(rep, first).real() == doctest::Approx(-0.5));
}

TEST_CASE("p_zero") {
  CHECK(p_zero(1.0) == 1.0);
  CHECK(p_zero(-1.0) == 0.0);
  CHECK(p_zero(0.0) == 0.5);
  CHECK_THROWS_AS(p_zero(1.5), std::invalid_argument);
}

TEST_CASE("estimate of a certain outcome has zero variance") {
  const ShotPlan plan = make_shot_plan(0.1, 0.1, OverlapPart::real);
  const HadamardEstimate e = simulate_estimate(cplx(1.0, 0.0), plan, 5);
  CHECK(e.estimate == 1.0);
  CHECK(e.std_error == 0.0);
  const HadamardEstimate z = simulate_estimate(cplx(-1.0, 0.0), plan, 5);
  CHECK(z.estimate == -1.0);
}

TEST_CASE("imaginary part selection") {
  const ShotPlan plan = make_shot_plan(0.1, 0.1, OverlapPart::imaginary);
  const HadamardEstimate e = simulate_estimate(cplx(0.3, 1.0), plan, 5);
  CHECK(e.estimate == 1.0);  // imaginary part 1 gives a certain zero outcome
}

TEST_CASE("estimates concentrate around a vanishing part") {
  const ShotPlan plan{0.05, 0.01, 10000, OverlapPart::real};
  int inside = 0;
  const int trials = 100;
  for (int k = 0; k < trials; ++k) {
    const HadamardEstimate e = simulate_estimate(cplx(0.0, 0.4), plan, 900 + k);
    CHECK(std::abs(e.estimate) <= 1.0);
    if (std::abs(e.estimate) <= 0.05) ++inside;
  }
  CHECK(inside >= 95);
}

TEST_CASE("fixed seed reproduces the estimate; thread count does not matter") {
  const ShotPlan plan = make_shot_plan(0.02, 0.02, OverlapPart::real);
  const HadamardEstimate a = simulate_estimate(cplx(0.25, 0.0), plan, 77, 1);
  const HadamardEstimate b = simulate_estimate(cplx(0.25, 0.0), plan, 77, 1);
  const HadamardEstimate c = simulate_estimate(cplx(0.25, 0.0), plan, 77, 2);
  CHECK(a.estimate == b.estimate);
  CHECK(a.estimate == c.estimate);
}

TEST_CASE("estimator is unbiased across many plans") {
  const double part = -0.5;
  const ShotPlan plan{0.05, 0.05, 2000, OverlapPart::real};
  const int plans = 1000;
  double mean = 0.0;
  for (int k = 0; k < plans; ++k)
    mean += simulate_estimate(cplx(part, 0.0), plan, 5000 + k).estimate;
  mean /= plans;
  const double sigma = std::sqrt((1.0 - part * part) / (2000.0 * plans));
  CHECK(std::abs(mean - part) < 4.0 * sigma);
}

TEST_CASE("end-to-end against the exact matrix element") {
  const YoungDiagram shape{{3, 1}};
  const Permutation p{{2, 3, 4, 1}};
  const SytBasis basis = syt_basis(shape);
  const DenseMatrix rep = rep_permutation(shape, p).matrix();
  const double exact = rep(1, 1).real();
  std::vector<cplx> psi(basis.dim());
  psi[1] = 1.0;
  const ShotPlan plan = make_shot_plan(0.05, 0.01, OverlapPart::real);
  int hits = 0;
  const int runs = 40;
  for (int k = 0; k < runs; ++k) {
    const HadamardEstimate e = simulate_estimate(
        [&rep](const std::vector<cplx>& v) { return apply(rep, v); }, psi, plan, 100 + k);
    if (std::abs(e.estimate - exact) <= 0.05) ++hits;
  }
  CHECK(hits >= 38);
}

TEST_CASE("plan below the confidence budget is rejected") {
  ShotPlan plan = make_shot_plan(0.05, 0.01, OverlapPart::real);
  plan.shots = 10;
  CHECK_THROWS_AS(simulate_estimate(cplx(0.0, 0.0), plan, 1), std::invalid_argument);
}
