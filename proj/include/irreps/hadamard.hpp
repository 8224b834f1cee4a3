#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "irreps/linalg.hpp"
#include "irreps/montecarlo.hpp"

namespace irreps {

enum class OverlapPart { real, imaginary };

struct ShotPlan {
  double epsilon;
  double delta;
  long long shots;  // >= hoeffding_floor_shots(epsilon, delta)
  OverlapPart part;
};

ShotPlan make_shot_plan(double epsilon, double delta, OverlapPart part);

using StateMap = std::function<std::vector<cplx>(const std::vector<cplx>&)>;

// Exact <psi| U |psi>; the state must be normalized to 1e-10.
cplx overlap(const StateMap& apply_u, const std::vector<cplx>& psi);
cplx overlap(const DenseMatrix& u, const std::vector<cplx>& psi);

// Probability of the 0 outcome: (1 + part)/2.
double p_zero(double overlap_part);

struct HadamardEstimate {
  double estimate;
  double std_error;
};

// One-ancilla estimation protocol, simulated without materializing the
// ancilla: the 0-outcome probability is computed exactly from the overlap
// (real part for the |0>+|1> control, imaginary for |0>-i|1>) and `shots`
// coin flips are drawn from it. estimate = 2 (fraction of zeros) - 1.
HadamardEstimate simulate_estimate(const StateMap& apply_u, const std::vector<cplx>& psi,
                                   const ShotPlan& plan, std::uint64_t seed, int threads = 1);
HadamardEstimate simulate_estimate(cplx overlap_value, const ShotPlan& plan, std::uint64_t seed,
                                   int threads = 1);

}  // namespace irreps
