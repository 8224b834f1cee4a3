#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace irreps {

using cplx = std::complex<double>;

// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  cplx* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
  const cplx* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(cplx s);

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(cplx s, DenseMatrix a);

// Reference product: plain i-k-j loop, single thread.
DenseMatrix matmul_serial(const DenseMatrix& a, const DenseMatrix& b);

// OpenMP product, parallel over output rows. Each output row is accumulated
// in the same order as the serial kernel, so results are bit-identical for
// any thread count.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, int threads = 1);

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

std::vector<cplx> apply(const DenseMatrix& a, const std::vector<cplx>& v);

double max_norm(const DenseMatrix& a);                             // max |a_ij|
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double one_norm(const DenseMatrix& a);                             // max column abs sum
double unitarity_defect(const DenseMatrix& u);                     // ||U^† U - I||_max
cplx trace(const DenseMatrix& a);

// Partial-pivot LU. Throws std::domain_error on a numerically singular pivot.
DenseMatrix lu_solve(DenseMatrix a, DenseMatrix b);
cplx determinant(DenseMatrix a);

// Scaling-and-squaring Pade-13 exponential (Higham's degree/threshold table).
DenseMatrix expm(const DenseMatrix& a, int threads = 1);

// Eigenvalues of a hermitian matrix by cyclic complex Jacobi, ascending.
std::vector<double> hermitian_eigenvalues(DenseMatrix a);

// Spectral norm of an antihermitian matrix (largest |eigenvalue|).
double spectral_norm_antihermitian(const DenseMatrix& a);

// Gershgorin row-sum bound on the spectral norm of a normal matrix.
double gershgorin_bound(const DenseMatrix& a);

// Row-indexed sparse operator. Column indices are unique per row and in
// range; exact zeros are never stored.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(int dim) : dim_(dim), rows_(dim) {}

  int dim() const { return dim_; }

  // Accumulates v into entry (row, col); drops the entry if it cancels to 0.
  void add(int row, int col, cplx v);

  const std::vector<std::pair<int, cplx>>& row(int i) const { return rows_[i]; }

  DenseMatrix to_dense() const;
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  DenseMatrix apply_left(const DenseMatrix& m, int threads = 1) const;  // (*this) * m

  SparseOperator& axpy(cplx s, const SparseOperator& o);  // *this += s * o
  SparseOperator scaled(cplx s) const;

  cplx entry(int row, int col) const;
  std::size_t nonzeros() const;

 private:
  int dim_ = 0;
  std::vector<std::vector<std::pair<int, cplx>>> rows_;
};

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

// Dense matrix checked to be unitary at construction:
// ||U^† U - I||_max <= 1e-9 * dim.
class DenseUnitary {
 public:
  explicit DenseUnitary(DenseMatrix m);

  int dim() const { return m_.rows(); }
  const DenseMatrix& matrix() const { return m_; }

 private:
  DenseMatrix m_;
};

}  // namespace irreps
