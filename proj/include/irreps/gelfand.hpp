#pragma once

#include <map>
#include <vector>

#include "irreps/linalg.hpp"

namespace irreps {

inline constexpr int kDefaultPatternCap = 4096;

enum class GroupTag { gl, so_odd, so_even };

// Highest weight. Entries are stored doubled so half-integer so(n) weights
// stay exact; gl entries are always even when doubled.
struct GTWeight {
  GroupTag group = GroupTag::gl;
  std::vector<int> twice_entries;

  // Matrix size n of the group the weight belongs to.
  int width() const;

  bool operator==(const GTWeight&) const = default;
};

GTWeight gl_weight(const std::vector<int>& entries);

bool is_valid_weight(const GTWeight& w);
void validate_weight(const GTWeight& w);

// Triangular pattern stored top-down: rows[0] is the weight row. For gl the
// row at level p (p = n..1) has p entries; for so the row at level q
// (q = n..2) has floor(q/2) entries. All entries doubled.
struct GelfandPattern {
  GroupTag group = GroupTag::gl;
  int width = 0;
  std::vector<std::vector<int>> rows;

  int base_level() const { return group == GroupTag::gl ? 1 : 2; }
  const std::vector<int>& row_at_level(int level) const { return rows[width - level]; }
  std::vector<int>& row_at_level(int level) { return rows[width - level]; }
  std::vector<int> flatten() const;

  bool operator==(const GelfandPattern&) const = default;
};

bool is_valid_pattern(const GelfandPattern& m);

// Ordered pattern list with index lookup. Patterns are ordered
// lexicographically on the flattened top-down entries, largest first, so
// raising generators come out upper triangular.
struct PatternBasis {
  GTWeight weight;
  std::vector<GelfandPattern> patterns;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(patterns.size()); }
  int index_of(const GelfandPattern& m) const;  // -1 when absent
};

PatternBasis enumerate_patterns(const GTWeight& w, int cap = kDefaultPatternCap);
long long gt_dimension(const GTWeight& w, int cap = kDefaultPatternCap);

enum class GlGenerator { raising, lowering, diagonal };

// Action of the generator indexed by p: raising is E_{p-1,p} and lowering
// E_{p,p-1} (2 <= p <= n), diagonal is E_{p,p} (1 <= p <= n). Terms whose
// target pattern violates the betweenness rules are dropped after verifying
// the raw coefficient vanishes.
SparseOperator gl_action(const PatternBasis& basis, GlGenerator g, int p);
SparseOperator gl_action(const GTWeight& w, GlGenerator g, int p, int cap = kDefaultPatternCap);

// E_{ij} for arbitrary indices, built recursively through the commutation
// relation [E_{ik}, E_{kj}] = E_{ij}.
SparseOperator gl_action_general(const PatternBasis& basis, int i, int j);
SparseOperator gl_action_general(const GTWeight& w, int i, int j, int cap = kDefaultPatternCap);

// Action of an n x n matrix supported on the 2x2 block at rows/columns
// {p+1, p+2} (0 <= p <= n-2): the linear combination of the four adjacent
// generator actions. Antihermitian input yields antihermitian output.
SparseOperator gl_algebra_element(const PatternBasis& basis, const DenseMatrix& h, int p);
SparseOperator gl_algebra_element(const GTWeight& w, const DenseMatrix& h, int p,
                                  int cap = kDefaultPatternCap);

// so(n) generator action b(I_{q+1,q}), 1 <= q <= n-1. Antihermitian.
SparseOperator so_action(const PatternBasis& basis, int q);
SparseOperator so_action(const GTWeight& w, int q, int cap = kDefaultPatternCap);

// Torus weight of a pattern: the eigenvalue list of the diagonal gl
// generators E_{p,p} (row-sum differences), in units.
std::vector<double> gl_pattern_weight(const GelfandPattern& m);

}  // namespace irreps
