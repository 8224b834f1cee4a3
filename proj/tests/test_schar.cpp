#include <doctest.h>

#include <cmath>
#include <vector>

#include "irreps/schar.hpp"
#include "irreps/symrep.hpp"
#include "test_util.hpp"

using namespace irreps;

namespace {

// A permutation with the given cycle type: consecutive cycles left to right.
Permutation representative(const CycleType& mu) {
  Permutation p = identity_perm(mu.total());
  int start = 1;
  for (int part : mu.parts) {
    for (int i = 0; i < part; ++i) p.images[start - 1 + i] = start + (i + 1) % part;
    start += part;
  }
  return p;
}

}  // namespace

TEST_CASE("roichman context") {
  const RoichmanContext ctx = roichman_context(CycleType{{3, 2}});
  CHECK(ctx.b_set == std::set<int>{3, 5});
  CHECK_THROWS_AS(roichman_context(CycleType{{2, 3}}), std::invalid_argument);
}

TEST_CASE("f values on extreme shapes") {
  const RoichmanContext ctx = roichman_context(CycleType{{4}});
  const StandardTableau row = tableau_from_row_word(YoungDiagram{{4}}, {1, 2, 3, 4});
  const StandardTableau col = tableau_from_row_word(YoungDiagram{{1, 1, 1, 1}}, {1, 2, 3, 4});
  for (int i = 1; i <= 3; ++i) {
    CHECK(roichman_f(ctx, i, row) == 1);
    CHECK(roichman_f(ctx, i, col) == -1);
  }
  CHECK_THROWS_AS(roichman_f(ctx, 4, row), std::invalid_argument);
}

TEST_CASE("f zero case on the hook tableau") {
  // mu = (3): B = {3}; in [[1,2],[3]] box 2 sits northeast of box 1 and box 3
  // southwest of box 2 with 2 not in B, so f(1) = 0.
  const RoichmanContext ctx = roichman_context(CycleType{{3}});
  const StandardTableau t = tableau_from_row_word(YoungDiagram{{2, 1}}, {1, 2, 3});
  CHECK(roichman_f(ctx, 1, t) == 0);
  CHECK(roichman_weight(ctx, t) == 0);
  const StandardTableau other = tableau_from_row_word(YoungDiagram{{2, 1}}, {1, 3, 2});
  CHECK(roichman_weight(ctx, other) == -1);
}

TEST_CASE("weights on trivial and sign data") {
  // Single row: every factor is 1.
  const RoichmanContext ctx32 = roichman_context(CycleType{{3, 2}});
  const StandardTableau row = tableau_from_row_word(YoungDiagram{{5}}, {1, 2, 3, 4, 5});
  CHECK(roichman_weight(ctx32, row) == 1);
  // Identity class: B covers everything, empty product.
  const RoichmanContext ones = roichman_context(CycleType{{1, 1, 1}});
  for (const StandardTableau& t : enumerate_syt(YoungDiagram{{1, 1, 1}}))
    CHECK(roichman_weight(ones, t) == 1);
}

TEST_CASE("tableau-sum characters for shape (2,1)") {
  CHECK(exact_character_roichman(YoungDiagram{{2, 1}}, CycleType{{1, 1, 1}}) == 2);
  CHECK(exact_character_roichman(YoungDiagram{{2, 1}}, CycleType{{3}}) == -1);
  CHECK(exact_character_roichman(YoungDiagram{{5}}, CycleType{{3, 2}}) == 1);
  CHECK_THROWS_AS(exact_character_roichman(YoungDiagram{{2, 1}}, CycleType{{2, 2}}),
                  std::invalid_argument);
}

TEST_CASE("tableau sum equals the trace oracle, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& shape_parts : testutil::partitions(n)) {
      const YoungDiagram shape{shape_parts};
      for (const auto& mu_parts : testutil::partitions(n)) {
        const CycleType mu{mu_parts};
        const double traced = exact_character(shape, representative(mu));
        CHECK(exact_character_roichman(shape, mu) == doctest::Approx(traced).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("estimator: trivial representation is exact") {
  const EstimatorReport r =
      estimate_normalized_character(YoungDiagram{{6}}, CycleType{{3, 2, 1}}, 0.2, 0.1, 42);
  CHECK(r.estimate == 1.0);
  CHECK(r.shots >= hoeffding_shots(0.2, 0.1));
}

TEST_CASE("estimator lands near the oracle for (2,1), mu=(3)") {
  const EstimatorReport r =
      estimate_normalized_character(YoungDiagram{{2, 1}}, CycleType{{3}}, 0.05, 0.01, 7);
  CHECK(r.shots == hoeffding_shots(0.05, 0.01));
  CHECK(std::abs(r.estimate - (-0.5)) <= 0.05);
  CHECK(r.estimate >= -1.0);
  CHECK(r.estimate <= 1.0);
}

TEST_CASE("estimator matches the enumeration oracle at n = 10") {
  const YoungDiagram shape{{4, 3, 2, 1}};
  const CycleType mu{{2, 1, 1, 1, 1, 1, 1, 1, 1}};
  const double exact = static_cast<double>(exact_character_roichman(shape, mu)) /
                       static_cast<double>(syt_count(shape));
  const EstimatorReport r = estimate_normalized_character(shape, mu, 0.1, 0.05, 3);
  CHECK(std::abs(r.estimate - exact) <= 0.1);
}

TEST_CASE("estimator: identity class is exactly one") {
  const EstimatorReport r = estimate_normalized_character(
      YoungDiagram{{3, 2}}, CycleType{{1, 1, 1, 1, 1}}, 0.1, 0.05, 11);
  CHECK(r.estimate == 1.0);
}

TEST_CASE("estimator is reproducible and thread-count independent") {
  const YoungDiagram shape{{3, 2, 1}};
  const CycleType mu{{3, 3}};
  const EstimatorReport a = estimate_normalized_character(shape, mu, 0.05, 0.05, 99, 1);
  const EstimatorReport b = estimate_normalized_character(shape, mu, 0.05, 0.05, 99, 1);
  const EstimatorReport c = estimate_normalized_character(shape, mu, 0.05, 0.05, 99, 2);
  CHECK(a.estimate == b.estimate);
  CHECK(a.estimate == c.estimate);
  const EstimatorReport d = estimate_normalized_character(shape, mu, 0.05, 0.05, 100, 1);
  CHECK(a.estimate != d.estimate);  // different seed, different draw
}

TEST_CASE("estimator is unbiased within three sigma") {
  const YoungDiagram shape{{3, 2, 1}};
  const CycleType mu{{2, 2, 1, 1}};
  const double exact = static_cast<double>(exact_character_roichman(shape, mu)) /
                       static_cast<double>(syt_count(shape));
  const int reports = 60;
  double mean = 0.0;
  long long shots = 0;
  for (int k = 0; k < reports; ++k) {
    const EstimatorReport r =
        estimate_normalized_character(shape, mu, 0.1, 0.05, 1000 + k);
    mean += r.estimate;
    shots = r.shots;
  }
  mean /= reports;
  // The weight is bounded by one, so the variance of each report is at most
  // 1/shots and of the grand mean 1/(reports * shots).
  const double sigma = 1.0 / std::sqrt(static_cast<double>(reports) * shots);
  CHECK(std::abs(mean - exact) < 3.0 * sigma);
}

TEST_CASE("estimator rejects invalid accuracy parameters") {
  CHECK_THROWS_AS(
      estimate_normalized_character(YoungDiagram{{2, 1}}, CycleType{{3}}, 0.0, 0.1, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      estimate_normalized_character(YoungDiagram{{2, 1}}, CycleType{{3}}, 0.1, 1.0, 1),
      std::invalid_argument);
}
