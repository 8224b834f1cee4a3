#include "irreps/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace irreps {

int CycleType::total() const {
  int n = 0;
  for (int p : parts) n += p;
  return n;
}

bool is_valid_permutation(const Permutation& p) {
  const int n = p.size();
  if (n < 1) return false;
  std::vector<bool> seen(n, false);
  for (int v : p.images) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

void validate_permutation(const Permutation& p) {
  if (!is_valid_permutation(p))
    throw std::invalid_argument("permutation: images must be a bijection on 1..n, n >= 1");
}

Permutation identity_perm(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("adjacent_transposition: index out of range");
  Permutation p = identity_perm(n);
  std::swap(p.images[i - 1], p.images[i]);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r;
  r.images.resize(p.size());
  for (int i = 1; i <= p.size(); ++i) r.images[i - 1] = p(q(i));
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images.resize(p.size());
  for (int i = 1; i <= p.size(); ++i) r.images[p(i) - 1] = i;
  return r;
}

std::vector<int> bubblesort_decompose(const Permutation& p) {
  validate_permutation(p);
  std::vector<int> work = p.images;
  const int n = p.size();
  std::vector<int> swaps;  // order in which positions were swapped while sorting
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (work[i] > work[i + 1]) {
        std::swap(work[i], work[i + 1]);
        swaps.push_back(i + 1);
        changed = true;
      }
    }
  }
  // Sorting applied p . s_{a_1} . ... . s_{a_k} = id, so p = s_{a_k} . ... . s_{a_1}.
  std::vector<int> word(swaps.rbegin(), swaps.rend());
  return word;
}

CycleType cycle_type(const Permutation& p) {
  validate_permutation(p);
  const int n = p.size();
  std::vector<bool> seen(n, false);
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = p(j);
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return CycleType{std::move(parts)};
}

PermStats perm_stats(const Permutation& p) {
  validate_permutation(p);
  const int n = p.size();
  int inversions = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++inversions;
  int moved = 0;
  int largest = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) != i) {
      ++moved;
      largest = i;
    }
  }
  const int cycles = static_cast<int>(cycle_type(p).parts.size());
  PermStats s;
  s.sign = (inversions % 2 == 0) ? 1 : -1;
  s.min_transpositions = n - cycles;
  s.moved = moved;
  s.largest_moved = largest;
  s.coxeter_length = inversions;
  return s;
}

bool is_even(const Permutation& p) { return perm_stats(p).sign == 1; }

Permutation hard_instance(int n) {
  if (n < 2) throw std::invalid_argument("hard_instance: n must be at least 2");
  Permutation p = identity_perm(n);
  std::swap(p.images.front(), p.images.back());
  return p;
}

Permutation random_permutation(int n, Rng& rng) {
  Permutation p = identity_perm(n);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p.images[i], p.images[j]);
  }
  return p;
}

}  // namespace irreps
