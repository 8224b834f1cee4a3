#pragma once

#include <map>
#include <vector>

#include "irreps/linalg.hpp"
#include "irreps/permutation.hpp"
#include "irreps/tableaux.hpp"

namespace irreps {

inline constexpr int kDefaultRepDimCap = 4096;

// Ordered standard-tableau basis with index lookup by row reading word.
struct SytBasis {
  YoungDiagram shape;
  std::vector<StandardTableau> tableaux;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(tableaux.size()); }
  int index_of(const StandardTableau& t) const;  // -1 when absent
};

SytBasis syt_basis(const YoungDiagram& shape, int box_cap = kDefaultSytCap);

// Representation of the adjacent transposition sigma_i: each basis tableau T
// maps to (1/tau) T + sqrt(1 - 1/tau^2) T' with tau the axial distance and T'
// the label swap of i, i+1; the swapped term is dropped exactly when T' is
// not standard (its coefficient is then 0). Real, symmetric, orthogonal.
SparseOperator rep_adjacent(const SytBasis& basis, int i);
SparseOperator rep_adjacent(const YoungDiagram& shape, int i);

// Product of the adjacent-generator images over the reduced word of p,
// ordered so that rep(p q) = rep(p) rep(q). Real orthogonal.
DenseUnitary rep_permutation(const YoungDiagram& shape, const Permutation& p,
                             int dim_cap = kDefaultRepDimCap, int threads = 1);

double matrix_element(const YoungDiagram& shape, const Permutation& p,
                      const StandardTableau& row, const StandardTableau& col,
                      int dim_cap = kDefaultRepDimCap);

// Trace of rep_permutation; an integer up to roundoff.
double exact_character(const YoungDiagram& shape, const Permutation& p,
                       int dim_cap = kDefaultRepDimCap);

// rep(p) |col basis vector>, computed by applying the generator word.
std::vector<double> rep_apply_basis_vector(const SytBasis& basis, const Permutation& p, int col);

}  // namespace irreps
