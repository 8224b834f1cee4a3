#include "irreps/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irreps {

namespace {
constexpr long long kShardSize = 4096;
}

long long hoeffding_shots(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("hoeffding_shots: epsilon and delta must lie in (0,1)");
  return static_cast<long long>(
      std::ceil(2.0 * std::log(2.0 / delta) / (epsilon * epsilon)));
}

long long hoeffding_floor_shots(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("hoeffding_floor_shots: epsilon and delta must lie in (0,1)");
  return static_cast<long long>(std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon)));
}

double sharded_mean(long long shots, std::uint64_t seed, int threads,
                    const std::function<double(Rng&)>& draw) {
  if (shots <= 0) throw std::invalid_argument("sharded_mean: shots must be positive");
  const long long shards = (shots + kShardSize - 1) / kShardSize;
  std::vector<double> partial(shards, 0.0);
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long s = 0; s < shards; ++s) {
      Rng rng = shard_rng(seed, static_cast<std::uint64_t>(s));
      const long long count = std::min(kShardSize, shots - s * kShardSize);
      double sum = 0.0;
      for (long long k = 0; k < count; ++k) sum += draw(rng);
      partial[s] = sum;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total / static_cast<double>(shots);
  }
#endif
  (void)threads;
  for (long long s = 0; s < shards; ++s) {
    Rng rng = shard_rng(seed, static_cast<std::uint64_t>(s));
    const long long count = std::min(kShardSize, shots - s * kShardSize);
    double sum = 0.0;
    for (long long k = 0; k < count; ++k) sum += draw(rng);
    partial[s] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total / static_cast<double>(shots);
}

double sharded_mean_serial(long long shots, std::uint64_t seed,
                           const std::function<double(Rng&)>& draw) {
  return sharded_mean(shots, seed, 1, draw);
}

}  // namespace irreps
