#pragma once

#include <vector>

#include "irreps/linalg.hpp"
#include "irreps/symrep.hpp"

namespace irreps {

enum class AltBranch { whole, plus, minus };

// Irreducible-representation label for the alternating group: a whole
// symmetric-group representation when the shape is not self-conjugate, one of
// the two halves when it is.
struct AltIrrepLabel {
  YoungDiagram shape;
  AltBranch branch;
};

void validate_alt_label(const AltIrrepLabel& label);

// The involution S mixing conjugate tableau pairs: S T = i^((n-d)/2) sign(w_T) T^,
// where T^ is the conjugate tableau, w_T the relabelling into typewriter order
// and d the main-diagonal length. 2-sparse over the standard tableau basis.
struct AssociatorOperator {
  SparseOperator matrix;
  std::vector<std::pair<int, int>> pairs;  // (T, T^) with T lexicographically smaller
  bool odd_case;                           // (n - d)/2 odd
};

AssociatorOperator associator(const YoungDiagram& shape, int box_cap = kDefaultSytCap);

// Orthonormal eigenbases of S. Odd case: plus vectors (T + i T^)/sqrt(2),
// minus (T - i T^)/sqrt(2); even case: plus (T - T^)/sqrt(2), minus
// (T + T^)/sqrt(2). One vector per conjugate pair.
struct SplitBasis {
  std::vector<std::vector<cplx>> plus;
  std::vector<std::vector<cplx>> minus;
};

SplitBasis split_basis(const YoungDiagram& shape, int box_cap = kDefaultSytCap);

// <v_row| rep(p) |v_col> for the requested branch; an even permutation is
// required. For branch `whole` the indices address the standard-tableau
// basis directly; otherwise they address the split-basis vectors and the
// value is a 4-term combination of symmetric-group matrix elements.
cplx alt_matrix_element(const AltIrrepLabel& label, const Permutation& p, int row_idx, int col_idx,
                        int dim_cap = kDefaultRepDimCap);

int alt_branch_dimension(const AltIrrepLabel& label);

// Full branch block P^† rep(p) P with P the branch-basis column matrix.
DenseMatrix alt_branch_block(const AltIrrepLabel& label, const Permutation& p,
                             int dim_cap = kDefaultRepDimCap);

}  // namespace irreps
