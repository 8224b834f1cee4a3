#pragma once

#include <cstdint>
#include <functional>

#include "irreps/rng.hpp"

namespace irreps {

// Two-sided Hoeffding shot count for sample means ranging over [-1, 1]:
// ceil(2 ln(2/delta) / eps^2) guarantees P(|mean - mu| > eps) <= delta.
long long hoeffding_shots(double epsilon, double delta);

// Minimum admissible shot budget for a plan or report with the given
// accuracy targets (the unit-range Hoeffding count).
long long hoeffding_floor_shots(double epsilon, double delta);

// Mean of draw(rng) over `shots` draws. Work is split into fixed-size shards,
// each with its own stream derived from (seed, shard index), so the result
// depends only on (seed, shots) and never on the thread count. `threads <= 1`
// runs the plain serial loop; larger values enable the OpenMP kernel.
double sharded_mean(long long shots, std::uint64_t seed, int threads,
                    const std::function<double(Rng&)>& draw);

// Serial single-pass reference for the kernel above (same shard layout,
// no OpenMP). Kept for equivalence tests and the benchmark.
double sharded_mean_serial(long long shots, std::uint64_t seed,
                           const std::function<double(Rng&)>& draw);

}  // namespace irreps
