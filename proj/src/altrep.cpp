#include "irreps/altrep.hpp"

#include <cmath>
#include <stdexcept>

namespace irreps {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

void validate_alt_label(const AltIrrepLabel& label) {
  validate_diagram(label.shape);
  const bool self_conj = is_self_conjugate(label.shape);
  if (label.branch == AltBranch::whole && self_conj)
    throw std::invalid_argument("alt label: self-conjugate shape splits; pick plus or minus");
  if (label.branch != AltBranch::whole && !self_conj)
    throw std::invalid_argument("alt label: shape is not self-conjugate");
}

AssociatorOperator associator(const YoungDiagram& shape, int box_cap) {
  validate_diagram(shape);
  if (!is_self_conjugate(shape))
    throw std::invalid_argument("associator: shape must be self-conjugate");
  const int n = shape.boxes();
  const int d = diagonal_length(shape);
  if ((n - d) % 2 != 0) throw std::logic_error("associator: n - d must be even");
  const int half = (n - d) / 2;
  const cplx phase = i_power(half);

  const SytBasis basis = syt_basis(shape, box_cap);
  AssociatorOperator out;
  out.matrix = SparseOperator(basis.dim());
  out.odd_case = (half % 2 != 0);

  std::vector<int> conj_of(basis.dim());
  std::vector<int> sign_of(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    const StandardTableau conj = conjugate_tableau(basis.tableaux[k]);
    conj_of[k] = basis.index_of(conj);
    sign_of[k] = typewriter_data(basis.tableaux[k]).sign;
    if (conj_of[k] == k)
      throw std::logic_error("associator: conjugation fixed a standard tableau");
  }
  // The stated sign relation between conjugate pairs is asserted rather than
  // assumed: sign(w_T) = -sign(w_T^) in the odd case, equal in the even case.
  for (int k = 0; k < basis.dim(); ++k) {
    const int expected = out.odd_case ? -sign_of[k] : sign_of[k];
    if (sign_of[conj_of[k]] != expected)
      throw std::logic_error("associator: typewriter sign relation violated");
  }
  for (int k = 0; k < basis.dim(); ++k) {
    out.matrix.add(conj_of[k], k, phase * static_cast<double>(sign_of[k]));
    if (k < conj_of[k]) out.pairs.emplace_back(k, conj_of[k]);
  }
  return out;
}

SplitBasis split_basis(const YoungDiagram& shape, int box_cap) {
  const AssociatorOperator assoc = associator(shape, box_cap);
  const int dim = assoc.matrix.dim();
  SplitBasis out;
  for (const auto& [a, b] : assoc.pairs) {
    // S T_a = phi T_b with |phi| = 1, so (T_a + phi T_b)/sqrt(2) carries
    // eigenvalue +1 and (T_a - phi T_b)/sqrt(2) eigenvalue -1. For pairs
    // with positive typewriter sign this reduces to the combinations
    // (T + i T^)/sqrt(2) (odd case) and (T - T^)/sqrt(2) (even case).
    const cplx phi = assoc.matrix.entry(b, a);
    std::vector<cplx> plus(dim), minus(dim);
    plus[a] = kInvSqrt2;
    plus[b] = phi * kInvSqrt2;
    minus[a] = kInvSqrt2;
    minus[b] = -phi * kInvSqrt2;
    out.plus.push_back(std::move(plus));
    out.minus.push_back(std::move(minus));
  }
  return out;
}

int alt_branch_dimension(const AltIrrepLabel& label) {
  validate_alt_label(label);
  const auto count = static_cast<int>(syt_count(label.shape));
  return label.branch == AltBranch::whole ? count : count / 2;
}

cplx alt_matrix_element(const AltIrrepLabel& label, const Permutation& p, int row_idx, int col_idx,
                        int dim_cap) {
  validate_alt_label(label);
  validate_permutation(p);
  if (!is_even(p)) throw std::invalid_argument("alt_matrix_element: permutation must be even");
  const SytBasis basis = syt_basis(label.shape);
  if (basis.dim() > dim_cap) throw std::length_error("alt_matrix_element: dimension exceeds cap");
  if (label.branch == AltBranch::whole) {
    if (row_idx < 0 || row_idx >= basis.dim() || col_idx < 0 || col_idx >= basis.dim())
      throw std::invalid_argument("alt_matrix_element: index out of range");
    return matrix_element(label.shape, p, basis.tableaux[row_idx], basis.tableaux[col_idx],
                          dim_cap);
  }
  const SplitBasis split = split_basis(label.shape);
  const auto& vecs = label.branch == AltBranch::plus ? split.plus : split.minus;
  const int bdim = static_cast<int>(vecs.size());
  if (row_idx < 0 || row_idx >= bdim || col_idx < 0 || col_idx >= bdim)
    throw std::invalid_argument("alt_matrix_element: index out of range");
  const auto& vr = vecs[row_idx];
  const auto& vc = vecs[col_idx];
  // Each split vector has two nonzero components, so the element is a 4-term
  // combination of tableau-basis matrix elements.
  cplx sum = 0.0;
  for (int a = 0; a < basis.dim(); ++a) {
    if (vr[a] == cplx(0.0)) continue;
    for (int b = 0; b < basis.dim(); ++b) {
      if (vc[b] == cplx(0.0)) continue;
      const double elem =
          matrix_element(label.shape, p, basis.tableaux[a], basis.tableaux[b], dim_cap);
      sum += std::conj(vr[a]) * vc[b] * elem;
    }
  }
  return sum;
}

DenseMatrix alt_branch_block(const AltIrrepLabel& label, const Permutation& p, int dim_cap) {
  validate_alt_label(label);
  validate_permutation(p);
  if (!is_even(p)) throw std::invalid_argument("alt_branch_block: permutation must be even");
  const DenseMatrix rep = rep_permutation(label.shape, p, dim_cap).matrix();
  if (label.branch == AltBranch::whole) return rep;
  const SplitBasis split = split_basis(label.shape);
  const auto& vecs = label.branch == AltBranch::plus ? split.plus : split.minus;
  const int bdim = static_cast<int>(vecs.size());
  const int dim = rep.rows();
  DenseMatrix proj(dim, bdim);
  for (int j = 0; j < bdim; ++j)
    for (int i = 0; i < dim; ++i) proj(i, j) = vecs[j][i];
  return proj.adjoint() * rep * proj;
}

}  // namespace irreps
