// Wall-clock comparison of the serial reference kernels against the OpenMP
// paths: dense products, the matrix exponential, and the two Monte Carlo
// estimators. Equivalence of the outputs is covered by the test suite; this
// target only reports timings.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irreps/hadamard.hpp"
#include "irreps/linalg.hpp"
#include "irreps/montecarlo.hpp"
#include "irreps/rng.hpp"
#include "irreps/schar.hpp"
#include "irreps/tableaux.hpp"

using namespace irreps;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DenseMatrix random_matrix(int n, Rng& rng) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
  return m;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  int threads = 2;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);

  Rng rng(12345);
  {
    const int n = 384;
    const DenseMatrix a = random_matrix(n, rng);
    const DenseMatrix b = random_matrix(n, rng);
    auto t0 = std::chrono::steady_clock::now();
    const DenseMatrix c1 = matmul_serial(a, b);
    const double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    const DenseMatrix c2 = matmul(a, b, threads);
    const double tp = seconds(t0);
    report("matmul 384x384", ts, tp);
    if (max_abs_diff(c1, c2) != 0.0) std::printf("  MISMATCH\n");
  }
  {
    const int n = 160;
    DenseMatrix h = random_matrix(n, rng);
    h -= h.adjoint();  // antihermitian input, as in representation assembly
    auto t0 = std::chrono::steady_clock::now();
    const DenseMatrix e1 = expm(h, 1);
    const double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    const DenseMatrix e2 = expm(h, threads);
    const double tp = seconds(t0);
    report("expm 160x160", ts, tp);
    if (max_abs_diff(e1, e2) != 0.0) std::printf("  MISMATCH\n");
  }
  {
    const YoungDiagram shape{{5, 4, 3, 2, 1}};
    const CycleType mu{{3, 3, 3, 2, 2, 1, 1}};
    auto t0 = std::chrono::steady_clock::now();
    const EstimatorReport r1 = estimate_normalized_character(shape, mu, 0.01, 0.01, 7, 1);
    const double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    const EstimatorReport r2 = estimate_normalized_character(shape, mu, 0.01, 0.01, 7, threads);
    const double tp = seconds(t0);
    report("character estimate n=15", ts, tp);
    if (r1.estimate != r2.estimate) std::printf("  MISMATCH\n");
  }
  {
    const ShotPlan plan{0.001, 0.001, hoeffding_shots(0.001, 0.001), OverlapPart::real};
    auto t0 = std::chrono::steady_clock::now();
    const HadamardEstimate e1 = simulate_estimate(cplx(0.25, 0.0), plan, 99, 1);
    const double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    const HadamardEstimate e2 = simulate_estimate(cplx(0.25, 0.0), plan, 99, threads);
    const double tp = seconds(t0);
    report("shot sampling 3.8M", ts, tp);
    if (e1.estimate != e2.estimate) std::printf("  MISMATCH\n");
  }
  return 0;
}
