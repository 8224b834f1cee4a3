#include "irreps/schar.hpp"

#include <stdexcept>

namespace irreps {

namespace {

void validate_cycle_type(const CycleType& mu) {
  if (mu.parts.empty()) throw std::invalid_argument("cycle type: must be nonempty");
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    if (mu.parts[i] <= 0) throw std::invalid_argument("cycle type: parts must be positive");
    if (i > 0 && mu.parts[i] > mu.parts[i - 1])
      throw std::invalid_argument("cycle type: parts must be weakly decreasing");
  }
}

// -1 when the cited box lies strictly below the reference box (southwest),
// with the convention that a missing box never does.
bool strictly_below(const std::vector<std::pair<int, int>>& pos, int box, int reference, int n) {
  if (box > n) return false;
  return pos[box - 1].first > pos[reference - 1].first;
}

int f_value(const RoichmanContext& ctx, int i, const std::vector<std::pair<int, int>>& pos,
            int n) {
  if (strictly_below(pos, i + 1, i, n)) return -1;
  if (strictly_below(pos, i + 2, i + 1, n) && !ctx.b_set.count(i + 1)) return 0;
  return 1;
}

}  // namespace

RoichmanContext roichman_context(const CycleType& mu) {
  validate_cycle_type(mu);
  RoichmanContext ctx;
  ctx.mu = mu;
  int sum = 0;
  for (int part : mu.parts) {
    sum += part;
    ctx.b_set.insert(sum);
  }
  return ctx;
}

int roichman_f(const RoichmanContext& ctx, int i, const StandardTableau& t) {
  validate_tableau(t);
  const int n = t.shape.boxes();
  if (i < 1 || i > n - 1) throw std::invalid_argument("roichman_f: index out of range");
  if (ctx.b_set.count(i)) throw std::invalid_argument("roichman_f: index lies in B(mu)");
  return f_value(ctx, i, cell_positions(t), n);
}

int roichman_weight(const RoichmanContext& ctx, const StandardTableau& t) {
  validate_tableau(t);
  const int n = t.shape.boxes();
  if (ctx.mu.total() != n)
    throw std::invalid_argument("roichman_weight: cycle type must partition the box count");
  const auto pos = cell_positions(t);
  int w = 1;
  for (int i = 1; i <= n - 1; ++i) {
    if (ctx.b_set.count(i)) continue;
    w *= f_value(ctx, i, pos, n);
    if (w == 0) return 0;
  }
  return w;
}

long long exact_character_roichman(const YoungDiagram& shape, const CycleType& mu, int box_cap) {
  const RoichmanContext ctx = roichman_context(mu);
  if (mu.total() != shape.boxes())
    throw std::invalid_argument("exact_character_roichman: sizes must match");
  long long sum = 0;
  for (const StandardTableau& t : enumerate_syt(shape, box_cap)) sum += roichman_weight(ctx, t);
  return sum;
}

EstimatorReport estimate_normalized_character(const YoungDiagram& shape, const CycleType& mu,
                                              double epsilon, double delta, std::uint64_t seed,
                                              int threads) {
  validate_diagram(shape);
  const RoichmanContext ctx = roichman_context(mu);
  if (mu.total() != shape.boxes())
    throw std::invalid_argument("estimate_normalized_character: sizes must match");
  const long long shots = hoeffding_shots(epsilon, delta);
  const double estimate =
      sharded_mean(shots, seed, threads, [&shape, &ctx](Rng& rng) -> double {
        return static_cast<double>(roichman_weight(ctx, hook_walk_sample(shape, rng)));
      });
  return EstimatorReport{estimate, shots, epsilon, delta, seed};
}

}  // namespace irreps
