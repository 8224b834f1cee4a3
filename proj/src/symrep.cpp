#include "irreps/symrep.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace irreps {

int SytBasis::index_of(const StandardTableau& t) const {
  auto it = index.find(row_reading_word(t));
  return it == index.end() ? -1 : it->second;
}

SytBasis syt_basis(const YoungDiagram& shape, int box_cap) {
  SytBasis b;
  b.shape = shape;
  b.tableaux = enumerate_syt(shape, box_cap);
  for (int k = 0; k < static_cast<int>(b.tableaux.size()); ++k)
    b.index.emplace(row_reading_word(b.tableaux[k]), k);
  return b;
}

namespace {

StandardTableau swap_labels(const StandardTableau& t, int i) {
  StandardTableau out = t;
  for (auto& row : out.entries)
    for (int& v : row) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  return out;
}

}  // namespace

SparseOperator rep_adjacent(const SytBasis& basis, int i) {
  const int n = basis.shape.boxes();
  if (i < 1 || i > n - 1) throw std::invalid_argument("rep_adjacent: index out of range");
  SparseOperator op(basis.dim());
  for (int col = 0; col < basis.dim(); ++col) {
    const StandardTableau& t = basis.tableaux[col];
    const int tau = axial_distance(t, i);
    op.add(col, col, 1.0 / tau);
    const StandardTableau swapped = swap_labels(t, i);
    if (is_valid_tableau(swapped)) {
      const int row = basis.index_of(swapped);
      op.add(row, col, std::sqrt(1.0 - 1.0 / (static_cast<double>(tau) * tau)));
    }
    // Otherwise |tau| = 1 and the off-diagonal coefficient is exactly 0.
  }
  return op;
}

SparseOperator rep_adjacent(const YoungDiagram& shape, int i) {
  return rep_adjacent(syt_basis(shape), i);
}

DenseUnitary rep_permutation(const YoungDiagram& shape, const Permutation& p, int dim_cap,
                             int threads) {
  validate_permutation(p);
  if (p.size() != shape.boxes())
    throw std::invalid_argument("rep_permutation: permutation size must equal box count");
  const SytBasis basis = syt_basis(shape);
  if (basis.dim() > dim_cap) throw std::length_error("rep_permutation: dimension exceeds cap");
  const std::vector<int> word = bubblesort_decompose(p);
  std::vector<SparseOperator> gens(p.size());  // built on first use, indexed by i
  DenseMatrix m = DenseMatrix::identity(basis.dim());
  // rep(p) = S_{w[0]} * ... * S_{w[k-1]}: apply factors right to left.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (gens[*it].dim() == 0) gens[*it] = rep_adjacent(basis, *it);
    m = gens[*it].apply_left(m, threads);
  }
  return DenseUnitary(std::move(m));
}

std::vector<double> rep_apply_basis_vector(const SytBasis& basis, const Permutation& p, int col) {
  if (col < 0 || col >= basis.dim())
    throw std::invalid_argument("rep_apply_basis_vector: index out of range");
  const std::vector<int> word = bubblesort_decompose(p);
  std::vector<cplx> v(basis.dim());
  v[col] = 1.0;
  std::vector<SparseOperator> gens(p.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (gens[*it].dim() == 0) gens[*it] = rep_adjacent(basis, *it);
    v = gens[*it].apply(v);
  }
  std::vector<double> out(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) out[k] = v[k].real();
  return out;
}

double matrix_element(const YoungDiagram& shape, const Permutation& p,
                      const StandardTableau& row, const StandardTableau& col, int dim_cap) {
  validate_tableau(row);
  validate_tableau(col);
  if (row.shape != shape || col.shape != shape)
    throw std::invalid_argument("matrix_element: tableau shape mismatch");
  if (p.size() != shape.boxes())
    throw std::invalid_argument("matrix_element: permutation size must equal box count");
  const SytBasis basis = syt_basis(shape);
  if (basis.dim() > dim_cap) throw std::length_error("matrix_element: dimension exceeds cap");
  const int r = basis.index_of(row);
  const int c = basis.index_of(col);
  return rep_apply_basis_vector(basis, p, c)[r];
}

double exact_character(const YoungDiagram& shape, const Permutation& p, int dim_cap) {
  return trace(rep_permutation(shape, p, dim_cap).matrix()).real();
}

}  // namespace irreps
