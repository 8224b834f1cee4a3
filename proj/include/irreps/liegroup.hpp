#pragma once

#include <utility>
#include <vector>

#include "irreps/gelfand.hpp"
#include "irreps/linalg.hpp"

namespace irreps {

// Unitary acting on basis vectors i and j only (1-based, i < j <= n).
struct TwoLevelFactor {
  DenseMatrix block;  // 2x2, unitary to 1e-12
  int i = 1;
  int j = 2;
};

DenseMatrix embed_factor(const TwoLevelFactor& f, int n);

// Antihermitian logarithm with eigenphases in (-pi, pi]: exp(h) = u.
DenseMatrix log_unitary_2x2(const DenseMatrix& u);

// Column-elimination decomposition into at most n(n-1)/2 + n two-level
// factors whose embedded product, read left to right, reconstructs U.
std::vector<TwoLevelFactor> two_level_decompose(const DenseMatrix& u);

// Rewrites a factor on arbitrary levels as one factor on adjacent levels
// conjugated by adjacent swap factors; 2(j-i-1)+1 factors in total.
std::vector<TwoLevelFactor> adjacency_reduce(const TwoLevelFactor& f, int n);

// Assembled U(n) representation: decompose U into adjacent two-level factors,
// take the antihermitian log of each block, push it through the algebra
// action, exponentiate, and multiply in factor order.
DenseUnitary group_rep_u(const GTWeight& weight, const DenseMatrix& u,
                         int cap = kDefaultPatternCap, int threads = 1);

// Assembled SO(n) representation via adjacent Givens rotation angles.
DenseUnitary group_rep_so(const GTWeight& weight, const DenseMatrix& g,
                          int cap = kDefaultPatternCap, int threads = 1);

// Adjacent Givens factorization of a special orthogonal matrix: pairs
// (q, theta), 0-based q, such that the ordered product of the rotations
// exp(theta * (E_{q,q+1} - E_{q+1,q})) equals g.
std::vector<std::pair<int, double>> givens_decompose_so(const DenseMatrix& g);

// Representative with last entry zero among weights equivalent up to an
// overall integer shift; representations of determinant-one matrices agree
// across the class.
std::pair<GTWeight, int> su_canonical_weight(const GTWeight& weight);

// Strictly decreasing exponents l_i = m_i + n - i.
std::vector<int> exponent_vector(const GTWeight& weight);

long long weyl_dimension(const GTWeight& weight);

// Character of the U(n) representation at a unitary with the given unit
// modulus eigenvalues: ratio of the two alternant determinants when the
// spectrum is separated, otherwise the exact pattern-sum fallback.
cplx weyl_character_u(const GTWeight& weight, const std::vector<cplx>& eigenvalues,
                      int cap = kDefaultPatternCap);
cplx weyl_character_u_determinant(const GTWeight& weight, const std::vector<cplx>& eigenvalues);
// Independent evaluation: sum over patterns of the torus monomials.
cplx character_u_pattern_sum(const GTWeight& weight, const std::vector<cplx>& eigenvalues,
                             int cap = kDefaultPatternCap);

// SO(n) character at rotation angles theta_1..theta_k (eigenvalues
// e^{+-i theta_r}, plus a fixed eigenvalue 1 when n is odd). Degenerate
// spectra are handled by perturbing the angles and extrapolating.
double weyl_character_so(const GTWeight& weight, const std::vector<double>& angles);

struct NormProfile {
  std::vector<double> norms;       // ||a(H_p)|| for p = 0..n-2
  std::vector<double> gershgorin;  // row-sum bound for each p
};

// Spectral norms of the algebra action of the same 2x2 antihermitian block
// placed at every adjacent position; the norm is position-independent.
NormProfile norm_profile(const GTWeight& weight, const DenseMatrix& h,
                         int cap = kDefaultPatternCap);

}  // namespace irreps
