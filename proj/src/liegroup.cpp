#include "irreps/liegroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irreps {

namespace {

constexpr double kUnitaryTol = 1e-10;

cplx ipow(cplx z, int k) {
  if (k < 0) return ipow(1.0 / z, -k);
  cplx r = 1.0;
  while (k-- > 0) r *= z;
  return r;
}

void check_2x2(const DenseMatrix& m, const char* who) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument(std::string(who) + ": not 2x2");
}

DenseMatrix exp_2x2_antihermitian(const DenseMatrix& h);

}  // namespace

DenseMatrix embed_factor(const TwoLevelFactor& f, int n) {
  if (f.i < 1 || f.j <= f.i || f.j > n) throw std::invalid_argument("embed_factor: bad indices");
  DenseMatrix m = DenseMatrix::identity(n);
  m(f.i - 1, f.i - 1) = f.block(0, 0);
  m(f.i - 1, f.j - 1) = f.block(0, 1);
  m(f.j - 1, f.i - 1) = f.block(1, 0);
  m(f.j - 1, f.j - 1) = f.block(1, 1);
  return m;
}

DenseMatrix log_unitary_2x2(const DenseMatrix& u) {
  check_2x2(u, "log_unitary_2x2");
  if (unitarity_defect(u) > kUnitaryTol)
    throw std::domain_error("log_unitary_2x2: input is not unitary");
  const cplx t = u(0, 0) + u(1, 1);
  const cplx d = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const cplx disc = std::sqrt(t * t - 4.0 * d);
  const cplx lam1 = 0.5 * (t + disc);
  const cplx lam2 = 0.5 * (t - disc);
  DenseMatrix h(2, 2);
  if (std::abs(lam1 - lam2) < 1e-12) {
    // Normal with a repeated eigenvalue: u is a phase times the identity.
    const double theta = std::arg(u(0, 0));
    h(0, 0) = cplx(0.0, theta);
    h(1, 1) = cplx(0.0, theta);
  } else {
    // Eigenvector for lam1 from the columns of (u - lam2).
    cplx v0 = u(0, 0) - lam2;
    cplx v1 = u(1, 0);
    if (std::abs(v0) + std::abs(v1) < std::abs(u(0, 1)) + std::abs(u(1, 1) - lam2)) {
      v0 = u(0, 1);
      v1 = u(1, 1) - lam2;
    }
    const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nrm;
    v1 /= nrm;
    const cplx w0 = -std::conj(v1);  // orthogonal complement
    const cplx w1 = std::conj(v0);
    const cplx p1 = cplx(0.0, std::arg(lam1));
    const cplx p2 = cplx(0.0, std::arg(lam2));
    h(0, 0) = p1 * v0 * std::conj(v0) + p2 * w0 * std::conj(w0);
    h(0, 1) = p1 * v0 * std::conj(v1) + p2 * w0 * std::conj(w1);
    h(1, 0) = p1 * v1 * std::conj(v0) + p2 * w1 * std::conj(w0);
    h(1, 1) = p1 * v1 * std::conj(v1) + p2 * w1 * std::conj(w1);
  }
  if (max_abs_diff(exp_2x2_antihermitian(h), u) > kUnitaryTol)
    throw std::domain_error("log_unitary_2x2: round trip failed");
  return h;
}

namespace {

// exp of a 2x2 antihermitian matrix through its spectral decomposition.
DenseMatrix exp_2x2_antihermitian(const DenseMatrix& h) {
  const cplx t = h(0, 0) + h(1, 1);
  const cplx d = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
  const cplx disc = std::sqrt(t * t - 4.0 * d);
  const cplx lam1 = 0.5 * (t + disc);
  const cplx lam2 = 0.5 * (t - disc);
  DenseMatrix m(2, 2);
  if (std::abs(lam1 - lam2) < 1e-14) {
    const cplx e = std::exp(lam1);
    m(0, 0) = e;
    m(1, 1) = e;
    return m;
  }
  cplx v0 = h(0, 0) - lam2;
  cplx v1 = h(1, 0);
  if (std::abs(v0) + std::abs(v1) < std::abs(h(0, 1)) + std::abs(h(1, 1) - lam2)) {
    v0 = h(0, 1);
    v1 = h(1, 1) - lam2;
  }
  const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= nrm;
  v1 /= nrm;
  const cplx w0 = -std::conj(v1);
  const cplx w1 = std::conj(v0);
  const cplx e1 = std::exp(lam1);
  const cplx e2 = std::exp(lam2);
  m(0, 0) = e1 * v0 * std::conj(v0) + e2 * w0 * std::conj(w0);
  m(0, 1) = e1 * v0 * std::conj(v1) + e2 * w0 * std::conj(w1);
  m(1, 0) = e1 * v1 * std::conj(v0) + e2 * w1 * std::conj(w0);
  m(1, 1) = e1 * v1 * std::conj(v1) + e2 * w1 * std::conj(w1);
  return m;
}

void left_multiply_pair_rows(DenseMatrix& w, const DenseMatrix& g, int r0, int r1) {
  for (int j = 0; j < w.cols(); ++j) {
    const cplx a = w(r0, j);
    const cplx b = w(r1, j);
    w(r0, j) = g(0, 0) * a + g(0, 1) * b;
    w(r1, j) = g(1, 0) * a + g(1, 1) * b;
  }
}

}  // namespace

std::vector<TwoLevelFactor> two_level_decompose(const DenseMatrix& u) {
  const int n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("two_level_decompose: not square");
  if (unitarity_defect(u) > kUnitaryTol)
    throw std::domain_error("two_level_decompose: input is not unitary");
  if (n == 1) {
    // A single phase: report it on the only available pair of a 1x1 space.
    throw std::invalid_argument("two_level_decompose: dimension must be at least 2");
  }
  if (n == 2) {
    // A 2x2 unitary is itself a two-level factor.
    if (max_abs_diff(u, DenseMatrix::identity(2)) <= 1e-14) return {};
    return {TwoLevelFactor{u, 1, 2}};
  }
  DenseMatrix w = u;
  std::vector<TwoLevelFactor> elim;
  for (int c = 0; c < n - 1; ++c) {
    for (int r = c + 1; r < n; ++r) {
      const cplx b = w(r, c);
      if (std::abs(b) <= 1e-14) continue;
      const cplx a = w(c, c);
      const double s = std::sqrt(std::norm(a) + std::norm(b));
      DenseMatrix g(2, 2);
      g(0, 0) = std::conj(a) / s;
      g(0, 1) = std::conj(b) / s;
      g(1, 0) = b / s;
      g(1, 1) = -a / s;
      left_multiply_pair_rows(w, g, c, r);
      w(r, c) = 0.0;
      elim.push_back(TwoLevelFactor{g, c + 1, r + 1});
    }
  }
  std::vector<TwoLevelFactor> factors;
  for (const TwoLevelFactor& f : elim)
    factors.push_back(TwoLevelFactor{f.block.adjoint(), f.i, f.j});
  // w is now diagonal (triangular unitary); emit one phase factor per entry.
  for (int t = 0; t < n; ++t) {
    const cplx phase = w(t, t);
    if (std::abs(phase - 1.0) <= 1e-14) continue;
    DenseMatrix g = DenseMatrix::identity(2);
    TwoLevelFactor f;
    if (t < n - 1) {
      g(0, 0) = phase;
      f = TwoLevelFactor{g, t + 1, t + 2};
    } else {
      g(1, 1) = phase;
      f = TwoLevelFactor{g, n - 1, n};
    }
    factors.push_back(f);
  }
  DenseMatrix check = DenseMatrix::identity(n);
  for (const TwoLevelFactor& f : factors) check = check * embed_factor(f, n);
  if (max_abs_diff(check, u) > 1e-9 * n)
    throw std::logic_error("two_level_decompose: reconstruction failed");
  return factors;
}

std::vector<TwoLevelFactor> adjacency_reduce(const TwoLevelFactor& f, int n) {
  if (f.i < 1 || f.j <= f.i || f.j > n) throw std::invalid_argument("adjacency_reduce: bad indices");
  std::vector<TwoLevelFactor> out;
  DenseMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  for (int q = f.j - 1; q > f.i; --q) out.push_back(TwoLevelFactor{swap, q, q + 1});
  out.push_back(TwoLevelFactor{f.block, f.i, f.i + 1});
  for (int q = f.i + 1; q <= f.j - 1; ++q) out.push_back(TwoLevelFactor{swap, q, q + 1});
  DenseMatrix check = DenseMatrix::identity(n);
  for (const TwoLevelFactor& g : out) check = check * embed_factor(g, n);
  if (max_abs_diff(check, embed_factor(f, n)) > 1e-10)
    throw std::logic_error("adjacency_reduce: product check failed");
  return out;
}

DenseUnitary group_rep_u(const GTWeight& weight, const DenseMatrix& u, int cap, int threads) {
  if (weight.group != GroupTag::gl) throw std::invalid_argument("group_rep_u: gl weight required");
  const int n = weight.width();
  if (u.rows() != n || u.cols() != n)
    throw std::invalid_argument("group_rep_u: matrix size must match weight width");
  if (unitarity_defect(u) > kUnitaryTol)
    throw std::domain_error("group_rep_u: input is not unitary");
  const PatternBasis basis = enumerate_patterns(weight, cap);
  if (n == 1) {
    DenseMatrix rep(1, 1);
    rep(0, 0) = ipow(u(0, 0), weight.twice_entries[0] / 2);
    return DenseUnitary(std::move(rep));
  }
  DenseMatrix rep = DenseMatrix::identity(basis.dim());
  for (const TwoLevelFactor& coarse : two_level_decompose(u)) {
    for (const TwoLevelFactor& f : adjacency_reduce(coarse, n)) {
      const DenseMatrix h = log_unitary_2x2(f.block);
      const SparseOperator action = gl_algebra_element(basis, h, f.i - 1);
      rep = matmul(rep, expm(action.to_dense(), threads), threads);
    }
  }
  return DenseUnitary(std::move(rep));
}

std::vector<std::pair<int, double>> givens_decompose_so(const DenseMatrix& g) {
  const int n = g.rows();
  if (g.cols() != n) throw std::invalid_argument("givens_decompose_so: not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(g(i, j).imag()) > 1e-12)
        throw std::invalid_argument("givens_decompose_so: matrix must be real");
  if (unitarity_defect(g) > kUnitaryTol)
    throw std::domain_error("givens_decompose_so: input is not orthogonal");
  if (std::abs(determinant(g) - 1.0) > kUnitaryTol)
    throw std::domain_error("givens_decompose_so: determinant must be one");

  DenseMatrix w = g;
  std::vector<std::pair<int, double>> elim;  // (0-based q, angle applied on the left)
  for (int c = 0; c < n - 1; ++c) {
    for (int r = n - 1; r > c; --r) {
      const double y = w(r, c).real();
      if (std::abs(y) <= 1e-14) {
        w(r, c) = 0.0;
        continue;
      }
      const double x = w(r - 1, c).real();
      const double rho = std::hypot(x, y);
      DenseMatrix j(2, 2);
      j(0, 0) = x / rho;
      j(0, 1) = y / rho;
      j(1, 0) = -y / rho;
      j(1, 1) = x / rho;
      left_multiply_pair_rows(w, j, r - 1, r);
      w(r, c) = 0.0;
      elim.emplace_back(r - 1, std::atan2(y / rho, x / rho));
    }
  }
  // w_final = J_m ... J_1 g, so g = J_1^T ... J_m^T w_final: inverted angles
  // in elimination order.
  std::vector<std::pair<int, double>> rots;
  for (const auto& [q, theta] : elim) rots.emplace_back(q, -theta);
  // The residue is diagonal +-1 with unit determinant; clear the -1 entries
  // in consecutive pairs with straight-angle rotations.
  std::vector<int> flipped;
  for (int t = 0; t < n; ++t)
    if (w(t, t).real() < 0.0) flipped.push_back(t);
  if (flipped.size() % 2 != 0) throw std::logic_error("givens_decompose_so: odd flip count");
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k + 1 < flipped.size(); k += 2)
    for (int q = flipped[k]; q < flipped[k + 1]; ++q) rots.emplace_back(q, pi);

  DenseMatrix check = DenseMatrix::identity(n);
  for (const auto& [q, theta] : rots) {
    DenseMatrix rot(2, 2);
    rot(0, 0) = std::cos(theta);
    rot(0, 1) = std::sin(theta);
    rot(1, 0) = -std::sin(theta);
    rot(1, 1) = std::cos(theta);
    check = check * embed_factor(TwoLevelFactor{rot, q + 1, q + 2}, n);
  }
  if (max_abs_diff(check, g) > 1e-10 * n)
    throw std::logic_error("givens_decompose_so: reconstruction failed");
  return rots;
}

DenseUnitary group_rep_so(const GTWeight& weight, const DenseMatrix& g, int cap, int threads) {
  if (weight.group == GroupTag::gl)
    throw std::invalid_argument("group_rep_so: so weight required");
  const int n = weight.width();
  if (g.rows() != n || g.cols() != n)
    throw std::invalid_argument("group_rep_so: matrix size must match weight width");
  const PatternBasis basis = enumerate_patterns(weight, cap);
  std::vector<DenseMatrix> generator(n - 1);  // b(I_{q+1,q}) by 0-based q, built on use
  std::vector<bool> built(n - 1, false);
  DenseMatrix rep = DenseMatrix::identity(basis.dim());
  for (const auto& [q, theta] : givens_decompose_so(g)) {
    if (!built[q]) {
      generator[q] = so_action(basis, q + 1).to_dense();
      built[q] = true;
    }
    DenseMatrix scaled = generator[q];
    scaled *= cplx(theta);
    rep = matmul(rep, expm(scaled, threads), threads);
  }
  return DenseUnitary(std::move(rep));
}

std::pair<GTWeight, int> su_canonical_weight(const GTWeight& weight) {
  if (weight.group != GroupTag::gl)
    throw std::invalid_argument("su_canonical_weight: gl weight required");
  validate_weight(weight);
  const int shift_twice = weight.twice_entries.back();
  GTWeight canonical = weight;
  for (int& e : canonical.twice_entries) e -= shift_twice;
  return {canonical, shift_twice / 2};
}

std::vector<int> exponent_vector(const GTWeight& weight) {
  if (weight.group != GroupTag::gl)
    throw std::invalid_argument("exponent_vector: gl weight required");
  validate_weight(weight);
  const int n = weight.width();
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = weight.twice_entries[i] / 2 + n - (i + 1);
  return l;
}

long long weyl_dimension(const GTWeight& weight) {
  const std::vector<int> l = exponent_vector(weight);
  const int n = static_cast<int>(l.size());
  double dim = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim *= static_cast<double>(std::abs(l[i] - l[j])) / static_cast<double>(j - i);
  const long long rounded = std::llround(dim);
  if (std::abs(dim - static_cast<double>(rounded)) > 1e-6 * std::max(1.0, dim))
    throw std::logic_error("weyl_dimension: non-integer product");
  return rounded;
}

cplx weyl_character_u_determinant(const GTWeight& weight, const std::vector<cplx>& eigenvalues) {
  const std::vector<int> l = exponent_vector(weight);
  const int n = static_cast<int>(l.size());
  if (static_cast<int>(eigenvalues.size()) != n)
    throw std::invalid_argument("weyl_character_u: eigenvalue count must match weight width");
  DenseMatrix num(n, n), den(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num(i, j) = ipow(eigenvalues[i], l[j]);
      den(i, j) = ipow(eigenvalues[i], n - (j + 1));
    }
  const cplx d = determinant(den);
  if (std::abs(d) == 0.0)
    throw std::domain_error("weyl_character_u_determinant: degenerate spectrum");
  return determinant(num) / d;
}

cplx character_u_pattern_sum(const GTWeight& weight, const std::vector<cplx>& eigenvalues,
                             int cap) {
  if (weight.group != GroupTag::gl)
    throw std::invalid_argument("character_u_pattern_sum: gl weight required");
  const int n = weight.width();
  if (static_cast<int>(eigenvalues.size()) != n)
    throw std::invalid_argument("character_u_pattern_sum: eigenvalue count mismatch");
  const PatternBasis basis = enumerate_patterns(weight, cap);
  cplx sum = 0.0;
  for (const GelfandPattern& m : basis.patterns) {
    const std::vector<double> w = gl_pattern_weight(m);
    cplx term = 1.0;
    for (int p = 0; p < n; ++p) term *= ipow(eigenvalues[p], static_cast<int>(std::lround(w[p])));
    sum += term;
  }
  return sum;
}

cplx weyl_character_u(const GTWeight& weight, const std::vector<cplx>& eigenvalues, int cap) {
  double min_gap = 2.0;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      min_gap = std::min(min_gap, std::abs(eigenvalues[i] - eigenvalues[j]));
  if (min_gap > 1e-6) return weyl_character_u_determinant(weight, eigenvalues);
  return character_u_pattern_sum(weight, eigenvalues, cap);
}

namespace {

cplx half_power(double theta, double exponent) {
  return std::polar(1.0, theta * exponent);
}

// Direct alternant evaluation; throws std::domain_error when the
// denominator determinant is too small to divide by.
double so_character_direct(const GTWeight& weight, const std::vector<double>& angles) {
  const int k = static_cast<int>(weight.twice_entries.size());
  if (static_cast<int>(angles.size()) != k)
    throw std::invalid_argument("weyl_character_so: need one angle per weight entry");
  DenseMatrix num(k, k), den(k, k);
  if (weight.group == GroupTag::so_odd) {
    for (int i = 0; i < k; ++i) {
      const double mi = 0.5 * weight.twice_entries[i];
      for (int j = 0; j < k; ++j) {
        const double e1 = mi + k - (i + 1) + 0.5;
        const double e0 = k - (i + 1) + 0.5;
        num(i, j) = half_power(angles[j], e1) - half_power(angles[j], -e1);
        den(i, j) = half_power(angles[j], e0) - half_power(angles[j], -e0);
      }
    }
    const cplx d = determinant(den);
    if (std::abs(d) < 1e-8) throw std::domain_error("degenerate");
    const cplx chi = determinant(num) / d;
    return chi.real();
  }
  // Even case: sum of the symmetric and antisymmetric alternants.
  DenseMatrix numf(k, k);
  for (int i = 0; i < k; ++i) {
    const double li = 0.5 * weight.twice_entries[i] + k - (i + 1);
    for (int j = 0; j < k; ++j) {
      const double e0 = k - (i + 1);
      num(i, j) = half_power(angles[j], li) + half_power(angles[j], -li);
      numf(i, j) = half_power(angles[j], li) - half_power(angles[j], -li);
      den(i, j) = half_power(angles[j], e0) + half_power(angles[j], -e0);
    }
  }
  const cplx d = determinant(den);
  if (std::abs(d) < 1e-8) throw std::domain_error("degenerate");
  const cplx chi = (determinant(num) + determinant(numf)) / d;
  return chi.real();
}

}  // namespace

double weyl_character_so(const GTWeight& weight, const std::vector<double>& angles) {
  if (weight.group == GroupTag::gl)
    throw std::invalid_argument("weyl_character_so: so weight required");
  validate_weight(weight);
  try {
    return so_character_direct(weight, angles);
  } catch (const std::domain_error&) {
    // Perturb-and-extrapolate around the degenerate point: the character is
    // analytic and even-order in the perturbation, so two Richardson levels
    // on g(delta) = (chi(+delta) + chi(-delta))/2 cancel through delta^4.
    auto g = [&](double delta) {
      std::vector<double> shifted = angles;
      for (std::size_t j = 0; j < shifted.size(); ++j)
        shifted[j] += delta * static_cast<double>(j + 1);
      return 0.5 * (so_character_direct(weight, shifted) +
                    [&] {
                      std::vector<double> mirrored = angles;
                      for (std::size_t j = 0; j < mirrored.size(); ++j)
                        mirrored[j] -= delta * static_cast<double>(j + 1);
                      return so_character_direct(weight, mirrored);
                    }());
    };
    const double d0 = 0.04;
    const double g1 = g(d0);
    const double g2 = g(d0 / 2.0);
    const double g3 = g(d0 / 4.0);
    const double r1 = (4.0 * g2 - g1) / 3.0;
    const double r2 = (4.0 * g3 - g2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
  }
}

NormProfile norm_profile(const GTWeight& weight, const DenseMatrix& h, int cap) {
  if (weight.group != GroupTag::gl)
    throw std::invalid_argument("norm_profile: gl weight required");
  check_2x2(h, "norm_profile");
  if (max_abs_diff(h, cplx(-1.0) * h.adjoint()) > 1e-12)
    throw std::invalid_argument("norm_profile: block must be antihermitian");
  const PatternBasis basis = enumerate_patterns(weight, cap);
  const int n = weight.width();
  NormProfile out;
  for (int p = 0; p <= n - 2; ++p) {
    const DenseMatrix action = gl_algebra_element(basis, h, p).to_dense();
    out.norms.push_back(spectral_norm_antihermitian(action));
    out.gershgorin.push_back(gershgorin_bound(action));
  }
  return out;
}

}  // namespace irreps
