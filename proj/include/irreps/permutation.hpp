#pragma once

#include <vector>

#include "irreps/rng.hpp"

namespace irreps {

// One-based image array: images[i-1] = p(i).
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

// Weakly decreasing positive parts summing to n.
struct CycleType {
  std::vector<int> parts;

  int total() const;
  bool operator==(const CycleType&) const = default;
};

struct PermStats {
  int sign;                // (-1)^(inversion count)
  int min_transpositions;  // n - number of cycles (fixed points included)
  int moved;               // objects not left fixed
  int largest_moved;       // 0 for the identity
  int coxeter_length;      // inversion count = minimal adjacent-transposition word length
};

bool is_valid_permutation(const Permutation& p);
void validate_permutation(const Permutation& p);  // throws std::invalid_argument

Permutation identity_perm(int n);

// sigma_i: swaps i and i+1, 1 <= i <= n-1.
Permutation adjacent_transposition(int n, int i);

// (p . q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Reduced word of adjacent-transposition indices: p equals the composition of
// sigma_{w[0]} . sigma_{w[1]} . ... (leftmost factor applied last, matching
// compose). Length equals the inversion count.
std::vector<int> bubblesort_decompose(const Permutation& p);

CycleType cycle_type(const Permutation& p);
PermStats perm_stats(const Permutation& p);
bool is_even(const Permutation& p);

// The transposition exchanging 1 and n; moves few objects yet needs a long
// adjacent-transposition word (inversion count 2n-3). Requires n >= 2.
Permutation hard_instance(int n);

Permutation random_permutation(int n, Rng& rng);

}  // namespace irreps
