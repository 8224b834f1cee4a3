#pragma once

#include <cmath>
#include <vector>

#include "irreps/linalg.hpp"
#include "irreps/rng.hpp"

namespace irreps::testutil {

// Gaussian pair via Box-Muller on the deterministic generator.
inline double gauss(Rng& rng) {
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

// Haar-distributed unitary: Gram-Schmidt of a complex Ginibre matrix.
inline DenseMatrix haar_unitary(int n, Rng& rng) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(gauss(rng), gauss(rng));
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cplx proj = 0.0;
      for (int r = 0; r < n; ++r) proj += std::conj(m(r, prev)) * m(r, c);
      for (int r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
    }
    double nrm = 0.0;
    for (int r = 0; r < n; ++r) nrm += std::norm(m(r, c));
    nrm = std::sqrt(nrm);
    for (int r = 0; r < n; ++r) m(r, c) /= nrm;
  }
  return m;
}

// Haar-ish special unitary: divide a Haar unitary by an n-th root of its
// determinant.
inline DenseMatrix haar_special_unitary(int n, Rng& rng) {
  DenseMatrix u = haar_unitary(n, rng);
  const cplx det = determinant(u);
  const cplx root = std::polar(1.0, std::arg(det) / n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u(i, j) /= root;
  return u;
}

// Random special orthogonal matrix: exponential of a random antisymmetric
// real matrix.
inline DenseMatrix random_special_orthogonal(int n, Rng& rng) {
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = gauss(rng);
      a(i, j) = v;
      a(j, i) = -v;
    }
  return expm(a);
}

// Rotation by theta about a uniformly random axis in three dimensions.
inline DenseMatrix rotation_3d(double theta, Rng& rng) {
  double k[3] = {gauss(rng), gauss(rng), gauss(rng)};
  const double nrm = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  for (double& v : k) v /= nrm;
  DenseMatrix gen(3, 3);
  gen(0, 1) = -k[2];
  gen(1, 0) = k[2];
  gen(0, 2) = k[1];
  gen(2, 0) = -k[1];
  gen(1, 2) = -k[0];
  gen(2, 1) = k[0];
  gen *= cplx(theta);
  return expm(gen);
}

// Random 2x2 antihermitian block.
inline DenseMatrix random_antihermitian_2x2(Rng& rng) {
  DenseMatrix h(2, 2);
  h(0, 0) = cplx(0.0, gauss(rng));
  h(1, 1) = cplx(0.0, gauss(rng));
  const cplx off(gauss(rng), gauss(rng));
  h(0, 1) = off;
  h(1, 0) = -std::conj(off);
  return h;
}

// All partitions of n, descending parts, in lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace irreps::testutil
