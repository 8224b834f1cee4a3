#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "irreps/symrep.hpp"
#include "test_util.hpp"

using namespace irreps;

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

std::vector<YoungDiagram> shapes_of(int n) {
  std::vector<YoungDiagram> out;
  for (const auto& parts : testutil::partitions(n)) out.push_back(YoungDiagram{parts});
  return out;
}

}  // namespace

TEST_CASE("generator images for shape (2,1)") {
  const YoungDiagram shape{{2, 1}};
  const DenseMatrix s1 = rep_adjacent(shape, 1).to_dense();
  CHECK(s1(0, 0).real() == doctest::Approx(1.0));
  CHECK(s1(1, 1).real() == doctest::Approx(-1.0));
  CHECK(std::abs(s1(0, 1)) == doctest::Approx(0.0));
  CHECK(std::abs(s1(1, 0)) == doctest::Approx(0.0));

  const DenseMatrix s2 = rep_adjacent(shape, 2).to_dense();
  CHECK(s2(0, 0).real() == doctest::Approx(-0.5));
  CHECK(s2(0, 1).real() == doctest::Approx(kSqrt3Half));
  CHECK(s2(1, 0).real() == doctest::Approx(kSqrt3Half));
  CHECK(s2(1, 1).real() == doctest::Approx(0.5));

  CHECK_THROWS_AS(rep_adjacent(shape, 3), std::invalid_argument);
}

TEST_CASE("single-row shape carries the trivial representation") {
  const YoungDiagram shape{{4}};
  for (int i = 1; i <= 3; ++i) {
    const DenseMatrix m = rep_adjacent(shape, i).to_dense();
    CHECK(m.rows() == 1);
    CHECK(m(0, 0).real() == doctest::Approx(1.0));
  }
}

TEST_CASE("single-column shape carries the sign representation") {
  const YoungDiagram shape{{1, 1, 1}};
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation p = random_permutation(3, rng);
    const DenseMatrix m = rep_permutation(shape, p).matrix();
    CHECK(m(0, 0).real() == doctest::Approx(perm_stats(p).sign).epsilon(1e-12));
  }
}

TEST_CASE("rep_permutation basics") {
  const YoungDiagram shape{{2, 1}};
  const DenseMatrix id = rep_permutation(shape, identity_perm(3)).matrix();
  CHECK(max_abs_diff(id, DenseMatrix::identity(2)) == 0.0);

  // (1 3) = s1 s2 s1 has trace zero in the two-dimensional representation.
  const DenseMatrix m = rep_permutation(shape, Permutation{{3, 2, 1}}).matrix();
  CHECK(trace(m).real() == doctest::Approx(0.0));
}

TEST_CASE("generator relations for all shapes with n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const YoungDiagram& shape : shapes_of(n)) {
      const SytBasis basis = syt_basis(shape);
      const int d = basis.dim();
      std::vector<DenseMatrix> gen;
      for (int i = 1; i <= n - 1; ++i) gen.push_back(rep_adjacent(basis, i).to_dense());
      const DenseMatrix id = DenseMatrix::identity(d);
      for (int i = 0; i < n - 1; ++i) {
        CHECK(max_abs_diff(gen[i] * gen[i], id) < 1e-12);
        CHECK(max_abs_diff(gen[i], gen[i].transpose()) == 0.0);
        if (i + 1 < n - 1) {
          const DenseMatrix lhs = gen[i] * gen[i + 1] * gen[i];
          const DenseMatrix rhs = gen[i + 1] * gen[i] * gen[i + 1];
          CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        }
        for (int j = i + 2; j < n - 1; ++j)
          CHECK(max_abs_diff(gen[i] * gen[j], gen[j] * gen[i]) < 1e-12);
      }
    }
  }
}

TEST_CASE("homomorphism on random pairs for all shapes with n <= 5") {
  Rng rng(99);
  for (int n = 2; n <= 5; ++n) {
    for (const YoungDiagram& shape : shapes_of(n)) {
      for (int trial = 0; trial < 25; ++trial) {
        const Permutation p = random_permutation(n, rng);
        const Permutation q = random_permutation(n, rng);
        const DenseMatrix lhs = rep_permutation(shape, compose(p, q)).matrix();
        const DenseMatrix rhs =
            rep_permutation(shape, p).matrix() * rep_permutation(shape, q).matrix();
        CHECK(max_abs_diff(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("root mean square of entries is 1/sqrt(dim)") {
  Rng rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_below(4));
    const auto shapes = shapes_of(n);
    const YoungDiagram shape = shapes[rng.uniform_below(shapes.size())];
    const Permutation p = random_permutation(n, rng);
    const DenseMatrix m = rep_permutation(shape, p).matrix();
    const int d = m.rows();
    double sum = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) sum += std::norm(m(i, j));
    const double rms = std::sqrt(sum / (static_cast<double>(d) * d));
    CHECK(std::abs(rms - 1.0 / std::sqrt(static_cast<double>(d))) < 1e-12);
  }
}

TEST_CASE("matrix elements of (2,1)") {
  const YoungDiagram shape{{2, 1}};
  const auto basis = enumerate_syt(shape);
  CHECK(matrix_element(shape, identity_perm(3), basis[0], basis[0]) == doctest::Approx(1.0));
  CHECK(matrix_element(shape, identity_perm(3), basis[0], basis[1]) == doctest::Approx(0.0));
  // sigma_2 diagonal element on the first tableau.
  CHECK(matrix_element(shape, Permutation{{1, 3, 2}}, basis[0], basis[0]) ==
        doctest::Approx(-0.5));
  CHECK_THROWS_AS(
      matrix_element(YoungDiagram{{3}}, identity_perm(3), basis[0], basis[0]),
      std::invalid_argument);
}

TEST_CASE("matrix elements never exceed one in magnitude") {
  Rng rng(7);
  const YoungDiagram shape{{3, 2}};
  const auto basis = enumerate_syt(shape);
  for (int trial = 0; trial < 30; ++trial) {
    const Permutation p = random_permutation(5, rng);
    const int r = static_cast<int>(rng.uniform_below(basis.size()));
    const int c = static_cast<int>(rng.uniform_below(basis.size()));
    CHECK(std::abs(matrix_element(shape, p, basis[r], basis[c])) <= 1.0 + 1e-12);
  }
}

TEST_CASE("characters of S_3 from traces") {
  const Permutation transposition{{2, 1, 3}};
  const Permutation three_cycle{{2, 3, 1}};
  CHECK(exact_character(YoungDiagram{{3}}, transposition) == doctest::Approx(1.0));
  CHECK(exact_character(YoungDiagram{{3}}, three_cycle) == doctest::Approx(1.0));
  CHECK(exact_character(YoungDiagram{{2, 1}}, transposition) == doctest::Approx(0.0));
  CHECK(exact_character(YoungDiagram{{2, 1}}, three_cycle) == doctest::Approx(-1.0));
  CHECK(exact_character(YoungDiagram{{1, 1, 1}}, transposition) == doctest::Approx(-1.0));
  CHECK(exact_character(YoungDiagram{{1, 1, 1}}, three_cycle) == doctest::Approx(1.0));
  // Identity gives the dimension.
  CHECK(exact_character(YoungDiagram{{2, 1}}, identity_perm(3)) == doctest::Approx(2.0));
}

TEST_CASE("character depends only on the conjugacy class") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng.uniform_below(3));
    const auto shapes = shapes_of(n);
    const YoungDiagram shape = shapes[rng.uniform_below(shapes.size())];
    const Permutation p = random_permutation(n, rng);
    const Permutation g = random_permutation(n, rng);
    const Permutation conj = compose(compose(g, p), inverse(g));
    CHECK(exact_character(shape, conj) ==
          doctest::Approx(exact_character(shape, p)).epsilon(1e-8));
  }
}

TEST_CASE("basis is subgroup adapted: block diagonal over sub-shapes") {
  // Permutations fixing objects k+1..n act block-diagonally with blocks
  // grouped by the shape occupied by labels 1..k.
  const YoungDiagram shape{{3, 2, 1}};
  const int n = 6;
  const int k = 3;
  const SytBasis basis = syt_basis(shape);
  auto sub_shape = [k](const StandardTableau& t) {
    std::vector<int> rows;
    for (const auto& row : t.entries) {
      int len = 0;
      for (int v : row)
        if (v <= k) ++len;
      if (len > 0) rows.push_back(len);
    }
    return rows;
  };
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Permutation p = identity_perm(n);
    const Permutation small = random_permutation(k, rng);
    for (int i = 0; i < k; ++i) p.images[i] = small.images[i];
    const DenseMatrix m = rep_permutation(shape, p).matrix();
    for (int a = 0; a < basis.dim(); ++a)
      for (int b = 0; b < basis.dim(); ++b)
        if (sub_shape(basis.tableaux[a]) != sub_shape(basis.tableaux[b]))
          CHECK(std::abs(m(a, b)) < 1e-9);
  }
}

TEST_CASE("dimension cap is enforced") {
  // (4,3,2,1) has dimension 768; a cap below that must throw.
  CHECK_THROWS_AS(rep_permutation(YoungDiagram{{4, 3, 2, 1}}, identity_perm(10), 100),
                  std::length_error);
}
