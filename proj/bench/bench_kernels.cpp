// Benchmark: OpenMP kernels against the serial reference, plus end-to-end
// instance throughput. Build and run:
//   cmake --build build --target koszul_bench && ./build/bench/koszul_bench

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "koszul/generator.hpp"
#include "koszul/invariants.hpp"
#include "koszul/rng.hpp"
#include "koszul/runner.hpp"

using namespace koszul;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Matrix random_matrix(PrimeField f, SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = static_cast<std::uint32_t>(rng.below(f.p()));
  return m;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e18;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel kernels run serially\n");
#endif

  const PrimeField f(101);
  SplitMix64 rng(12345);

  std::printf("\n%-28s %10s %10s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");
  for (std::size_t n : {128u, 256u, 512u}) {
    auto m = random_matrix(f, rng, n, n);
    const double ts = time_best_of(3, [&] { (void)ref::rref(m); });
    const double tp = time_best_of(3, [&] { (void)rref(m); });
    std::printf("%-28s %10.2f %10.2f %7.2fx\n",
                ("rref " + std::to_string(n) + "x" + std::to_string(n)).c_str(), ts, tp, ts / tp);
  }
  for (std::size_t n : {128u, 256u, 512u}) {
    auto a = random_matrix(f, rng, n, n);
    auto b = random_matrix(f, rng, n, n);
    const double ts = time_best_of(3, [&] { (void)ref::mul(a, b); });
    const double tp = time_best_of(3, [&] { (void)mul(a, b); });
    std::printf("%-28s %10.2f %10.2f %7.2fx\n",
                ("mul  " + std::to_string(n) + "x" + std::to_string(n)).c_str(), ts, tp, ts / tp);
  }

  std::printf("\ninstance throughput (search, 500 instances, p=101):\n");
  for (int jobs : {1, 0}) {
    SearchParams sp;
    sp.seed = 31415;
    sp.count = 500;
    sp.field = 101;
    RunOptions opt;
    opt.jobs = jobs;
    const auto t0 = Clock::now();
    const RunOutcome out = run_search(sp, opt);
    const double t = ms_since(t0);
    std::printf("  jobs=%-4s %8.1f ms (%.2f ms/instance), exit %d\n",
                jobs == 0 ? "auto" : std::to_string(jobs).c_str(), t, t / 500.0, out.exit_code);
  }
  return 0;
}
