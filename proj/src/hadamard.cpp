#include "irreps/hadamard.hpp"

#include <cmath>
#include <stdexcept>

namespace irreps {

ShotPlan make_shot_plan(double epsilon, double delta, OverlapPart part) {
  return ShotPlan{epsilon, delta, hoeffding_shots(epsilon, delta), part};
}

cplx overlap(const StateMap& apply_u, const std::vector<cplx>& psi) {
  double norm2 = 0.0;
  for (const cplx& x : psi) norm2 += std::norm(x);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
    throw std::invalid_argument("overlap: state must be normalized");
  const std::vector<cplx> mapped = apply_u(psi);
  if (mapped.size() != psi.size()) throw std::invalid_argument("overlap: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) s += std::conj(psi[i]) * mapped[i];
  return s;
}

cplx overlap(const DenseMatrix& u, const std::vector<cplx>& psi) {
  return overlap([&u](const std::vector<cplx>& v) { return apply(u, v); }, psi);
}

double p_zero(double overlap_part) {
  if (std::abs(overlap_part) > 1.0 + 1e-12)
    throw std::invalid_argument("p_zero: overlap part must lie in [-1, 1]");
  const double p = 0.5 * (1.0 + overlap_part);
  return std::min(1.0, std::max(0.0, p));
}

HadamardEstimate simulate_estimate(cplx overlap_value, const ShotPlan& plan, std::uint64_t seed,
                                   int threads) {
  if (plan.shots < hoeffding_floor_shots(plan.epsilon, plan.delta))
    throw std::invalid_argument("simulate_estimate: shot budget below the confidence bound");
  const double part =
      plan.part == OverlapPart::real ? overlap_value.real() : overlap_value.imag();
  const double p0 = p_zero(part);
  const double frac0 = sharded_mean(plan.shots, seed, threads,
                                    [p0](Rng& rng) { return rng.bernoulli(p0) ? 1.0 : 0.0; });
  const double estimate = 2.0 * frac0 - 1.0;
  const double se = 2.0 * std::sqrt(std::max(frac0 * (1.0 - frac0), 0.0) /
                                    static_cast<double>(plan.shots));
  return HadamardEstimate{estimate, se};
}

HadamardEstimate simulate_estimate(const StateMap& apply_u, const std::vector<cplx>& psi,
                                   const ShotPlan& plan, std::uint64_t seed, int threads) {
  return simulate_estimate(overlap(apply_u, psi), plan, seed, threads);
}

}  // namespace irreps
