#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "irreps/montecarlo.hpp"
#include "irreps/permutation.hpp"
#include "irreps/tableaux.hpp"

namespace irreps {

// Cycle type mu together with its partial-sum set B(mu).
struct RoichmanContext {
  CycleType mu;
  std::set<int> b_set;
};

RoichmanContext roichman_context(const CycleType& mu);

// f_mu(i, T) in {-1, 0, 1}:
//   -1 when box i+1 lies strictly below box i;
//    0 when box i+1 lies weakly above-right of box i, box i+2 lies strictly
//      below box i+1, and i+1 is not in B(mu);
//    1 otherwise.
int roichman_f(const RoichmanContext& ctx, int i, const StandardTableau& t);

// Product of f_mu over i in {1..n-1} \ B(mu).
int roichman_weight(const RoichmanContext& ctx, const StandardTableau& t);

// Character by summing the weight over all standard tableaux of the shape.
long long exact_character_roichman(const YoungDiagram& shape, const CycleType& mu,
                                   int box_cap = kDefaultSytCap);

struct EstimatorReport {
  double estimate;
  long long shots;
  double epsilon;
  double delta;
  std::uint64_t seed;
};

// Normalized-character estimate: mean of the Roichman weight over
// hoeffding_shots(eps, delta) uniform hook-walk samples. The weight is
// bounded in [-1, 1], so P(|estimate - chi/d| > eps) <= delta.
EstimatorReport estimate_normalized_character(const YoungDiagram& shape, const CycleType& mu,
                                              double epsilon, double delta, std::uint64_t seed,
                                              int threads = 1);

}  // namespace irreps
