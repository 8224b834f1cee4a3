#include <doctest.h>

#include <algorithm>
#include <vector>

#include "irreps/permutation.hpp"
#include "test_util.hpp"

using namespace irreps;

namespace {

Permutation word_product(int n, const std::vector<int>& word) {
  Permutation p = identity_perm(n);
  for (int i : word) p = compose(p, adjacent_transposition(n, i));
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{images});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

TEST_CASE("compose basics") {
  const Permutation p{{2, 1, 3}};
  const Permutation q{{1, 3, 2}};
  CHECK(compose(identity_perm(3), p) == p);
  CHECK(compose(p, identity_perm(3)) == p);
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(compose(p, q) == Permutation{{2, 3, 1}});
  CHECK_THROWS_AS(compose(p, identity_perm(4)), std::invalid_argument);
}

TEST_CASE("compose is associative on random triples") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation a = random_permutation(7, rng);
    const Permutation b = random_permutation(7, rng);
    const Permutation c = random_permutation(7, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("validation rejects non-bijections") {
  CHECK_THROWS_AS(validate_permutation(Permutation{{1, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_permutation(Permutation{{0, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_permutation(Permutation{{}}), std::invalid_argument);
}

TEST_CASE("bubblesort word: fixed cases") {
  CHECK(bubblesort_decompose(identity_perm(4)).empty());
  CHECK(bubblesort_decompose(Permutation{{2, 1}}) == std::vector<int>{1});
  const std::vector<int> word = bubblesort_decompose(Permutation{{3, 2, 1}});
  CHECK(word.size() == 3);
  CHECK(word_product(3, word) == Permutation{{3, 2, 1}});
}

TEST_CASE("bubblesort word reproduces p with reduced length, exhaustive S_5") {
  for (const Permutation& p : all_permutations(5)) {
    const std::vector<int> word = bubblesort_decompose(p);
    CHECK(word_product(5, word) == p);
    CHECK(static_cast<int>(word.size()) == perm_stats(p).coxeter_length);
    CHECK(static_cast<int>(word.size()) <= 5 * 4 / 2);
  }
}

TEST_CASE("cycle type") {
  CHECK(cycle_type(Permutation{{2, 3, 1, 5, 4}}) == CycleType{{3, 2}});
  CHECK(cycle_type(identity_perm(4)) == CycleType{{1, 1, 1, 1}});
  CHECK(cycle_type(Permutation{{2, 3, 4, 5, 1}}) == CycleType{{5}});
}

TEST_CASE("cycle type is conjugation invariant") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = random_permutation(8, rng);
    const Permutation g = random_permutation(8, rng);
    const Permutation conj = compose(compose(g, p), inverse(g));
    CHECK(cycle_type(conj) == cycle_type(p));
  }
}

TEST_CASE("stats: identity, swap of ends, 3-cycle") {
  {
    const PermStats s = perm_stats(identity_perm(6));
    CHECK(s.sign == 1);
    CHECK(s.min_transpositions == 0);
    CHECK(s.moved == 0);
    CHECK(s.largest_moved == 0);
    CHECK(s.coxeter_length == 0);
  }
  {
    const int n = 9;
    const PermStats s = perm_stats(hard_instance(n));
    CHECK(s.sign == -1);
    CHECK(s.min_transpositions == 1);
    CHECK(s.moved == 2);
    CHECK(s.largest_moved == n);
    CHECK(s.coxeter_length == 2 * n - 3);
  }
  {
    const PermStats s = perm_stats(Permutation{{2, 3, 1}});
    CHECK(s.sign == 1);
    CHECK(s.min_transpositions == 2);
    CHECK(s.moved == 3);
    CHECK(s.largest_moved == 3);
    CHECK(s.coxeter_length == 2);
  }
}

TEST_CASE("sign is a homomorphism") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_below(9));
    const Permutation p = random_permutation(n, rng);
    const Permutation q = random_permutation(n, rng);
    CHECK(perm_stats(compose(p, q)).sign == perm_stats(p).sign * perm_stats(q).sign);
  }
}

TEST_CASE("hard instance") {
  CHECK(hard_instance(2) == Permutation{{2, 1}});
  CHECK(hard_instance(5) == Permutation{{5, 2, 3, 4, 1}});
  const PermStats s = perm_stats(hard_instance(8));
  CHECK(s.moved == 2);
  CHECK(s.largest_moved == 8);
  CHECK(s.coxeter_length == 13);
  CHECK_THROWS_AS(hard_instance(1), std::invalid_argument);
}

TEST_CASE("coxeter length equals word length exhaustively in S_4") {
  for (const Permutation& p : all_permutations(4)) {
    CHECK(perm_stats(p).coxeter_length ==
          static_cast<int>(bubblesort_decompose(p).size()));
  }
}
