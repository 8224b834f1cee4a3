#include "irreps/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irreps {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
DenseMatrix operator*(cplx s, DenseMatrix a) { return a *= s; }

namespace {

void product_row(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, int i) {
  const int n = a.cols();
  const int m = b.cols();
  cplx* ci = c.row_ptr(i);
  for (int k = 0; k < n; ++k) {
    const cplx aik = a(i, k);
    if (aik == cplx(0.0)) continue;
    const cplx* bk = b.row_ptr(k);
    for (int j = 0; j < m; ++j) ci[j] += aik * bk[j];
  }
}

}  // namespace

DenseMatrix matmul_serial(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) product_row(a, b, c, i);
  return c;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, int threads) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int i = 0; i < a.rows(); ++i) product_row(a, b, c, i);
    return c;
  }
#endif
  (void)threads;
  for (int i = 0; i < a.rows(); ++i) product_row(a, b, c, i);
  return c;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  return matmul_serial(a, b);
}

std::vector<cplx> apply(const DenseMatrix& a, const std::vector<cplx>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("apply: shape mismatch");
  std::vector<cplx> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    const cplx* ai = a.row_ptr(i);
    for (int j = 0; j < a.cols(); ++j) s += ai[j] * v[j];
    out[i] = s;
  }
  return out;
}

double max_norm(const DenseMatrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double one_norm(const DenseMatrix& a) {
  double m = 0.0;
  for (int j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

double unitarity_defect(const DenseMatrix& u) {
  DenseMatrix g = u.adjoint() * u;
  for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return max_norm(g);
}

cplx trace(const DenseMatrix& a) {
  cplx t = 0.0;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

DenseMatrix lu_solve(DenseMatrix a, DenseMatrix b) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("lu_solve: shape mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw std::domain_error("lu_solve: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
    }
    const cplx akk = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a(i, k) / akk;
      if (f == cplx(0.0)) continue;
      a(i, k) = f;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
    }
  }
  // back substitution
  for (int k = n - 1; k >= 0; --k) {
    for (int j = 0; j < b.cols(); ++j) {
      cplx s = b(k, j);
      for (int i = k + 1; i < n; ++i) s -= a(k, i) * b(i, j);
      b(k, j) = s / a(k, k);
    }
  }
  return b;
}

cplx determinant(DenseMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: not square");
  cplx det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    const cplx akk = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a(i, k) / akk;
      if (f == cplx(0.0)) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

// (13,13) Pade numerator/denominator split: exp(A) ~ (V - U)^{-1} (V + U).
void pade13(const DenseMatrix& a, DenseMatrix& u, DenseMatrix& v, int threads) {
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const int n = a.rows();
  const DenseMatrix id = DenseMatrix::identity(n);
  const DenseMatrix a2 = matmul(a, a, threads);
  const DenseMatrix a4 = matmul(a2, a2, threads);
  const DenseMatrix a6 = matmul(a4, a2, threads);
  DenseMatrix tmp = cplx(b[13]) * a6 + cplx(b[11]) * a4 + cplx(b[9]) * a2;
  tmp = matmul(a6, tmp, threads);
  tmp += cplx(b[7]) * a6 + cplx(b[5]) * a4 + cplx(b[3]) * a2 + cplx(b[1]) * id;
  u = matmul(a, tmp, threads);
  tmp = cplx(b[12]) * a6 + cplx(b[10]) * a4 + cplx(b[8]) * a2;
  v = matmul(a6, tmp, threads);
  v += cplx(b[6]) * a6 + cplx(b[4]) * a4 + cplx(b[2]) * a2 + cplx(b[0]) * id;
}

}  // namespace

DenseMatrix expm(const DenseMatrix& a, int threads) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: not square");
  const double theta13 = 5.371920351148152;
  const double norm = one_norm(a);
  int squarings = 0;
  DenseMatrix scaled = a;
  if (norm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    scaled *= cplx(std::ldexp(1.0, -squarings));
  }
  DenseMatrix u, v;
  pade13(scaled, u, v, threads);
  DenseMatrix result = lu_solve(v - u, v + u);
  for (int s = 0; s < squarings; ++s) result = matmul(result, result, threads);
  return result;
}

std::vector<double> hermitian_eigenvalues(DenseMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("hermitian_eigenvalues: not square");
  // Symmetrize away roundoff so the rotations below stay well-defined.
  for (int i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  double scale = max_norm(a);
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double tol = 1e-15 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= tol) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= tol * 1e-2) continue;
        const cplx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns: B = A J with J_pp = c, J_pq = s*phase, J_qp = -s*conj(phase), J_qq = c.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        // Rows: A' = J^† B.
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double spectral_norm_antihermitian(const DenseMatrix& a) {
  // iA is hermitian when A is antihermitian; shared spectrum magnitudes.
  DenseMatrix h = a;
  h *= cplx(0.0, 1.0);
  std::vector<double> eig = hermitian_eigenvalues(std::move(h));
  double m = 0.0;
  for (double e : eig) m = std::max(m, std::abs(e));
  return m;
}

double gershgorin_bound(const DenseMatrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

void SparseOperator::add(int row, int col, cplx v) {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::invalid_argument("SparseOperator::add: index out of range");
  if (v == cplx(0.0)) return;
  auto& r = rows_[row];
  for (auto& [c, val] : r) {
    if (c == col) {
      val += v;
      if (val == cplx(0.0)) {
        std::erase_if(r, [col](const auto& e) { return e.first == col; });
      }
      return;
    }
  }
  r.emplace_back(col, v);
}

DenseMatrix SparseOperator::to_dense() const {
  DenseMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (const auto& [c, v] : rows_[i]) m(i, c) = v;
  return m;
}

std::vector<cplx> SparseOperator::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("SparseOperator::apply: shape mismatch");
  std::vector<cplx> out(dim_);
  for (int i = 0; i < dim_; ++i) {
    cplx s = 0.0;
    for (const auto& [c, val] : rows_[i]) s += val * v[c];
    out[i] = s;
  }
  return out;
}

DenseMatrix SparseOperator::apply_left(const DenseMatrix& m, int threads) const {
  if (m.rows() != dim_) throw std::invalid_argument("SparseOperator::apply_left: shape mismatch");
  DenseMatrix out(dim_, m.cols());
  auto fill_row = [&](int i) {
    cplx* oi = out.row_ptr(i);
    for (const auto& [c, val] : rows_[i]) {
      const cplx* mc = m.row_ptr(c);
      for (int j = 0; j < m.cols(); ++j) oi[j] += val * mc[j];
    }
  };
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int i = 0; i < dim_; ++i) fill_row(i);
    return out;
  }
#endif
  (void)threads;
  for (int i = 0; i < dim_; ++i) fill_row(i);
  return out;
}

SparseOperator& SparseOperator::axpy(cplx s, const SparseOperator& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("SparseOperator::axpy: dim mismatch");
  if (s == cplx(0.0)) return *this;
  for (int i = 0; i < dim_; ++i)
    for (const auto& [c, v] : o.rows_[i]) add(i, c, s * v);
  return *this;
}

SparseOperator SparseOperator::scaled(cplx s) const {
  SparseOperator out(dim_);
  out.axpy(s, *this);
  return out;
}

cplx SparseOperator::entry(int row, int col) const {
  for (const auto& [c, v] : rows_[row])
    if (c == col) return v;
  return 0.0;
}

std::size_t SparseOperator::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dim mismatch");
  const int d = a.dim();
  SparseOperator out(d);
  // out = a*b - b*a, accumulated row by row.
  for (int i = 0; i < d; ++i) {
    for (const auto& [k, av] : a.row(i))
      for (const auto& [j, bv] : b.row(k)) out.add(i, j, av * bv);
    for (const auto& [k, bv] : b.row(i))
      for (const auto& [j, av] : a.row(k)) out.add(i, j, -bv * av);
  }
  return out;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dim mismatch");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (const auto& [c, v] : a.row(i)) m = std::max(m, std::abs(v - b.entry(i, c)));
    for (const auto& [c, v] : b.row(i)) m = std::max(m, std::abs(v - a.entry(i, c)));
  }
  return m;
}

DenseUnitary::DenseUnitary(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("DenseUnitary: not square");
  const double defect = unitarity_defect(m_);
  if (defect > 1e-9 * m_.rows())
    throw std::domain_error("DenseUnitary: unitarity defect " + std::to_string(defect));
}

}  // namespace irreps
