// Benchmark of the OpenMP kernels against their serial reference
// implementations.  Not a correctness test (the parallel_serial suite
// covers equality); this just reports wall time per kernel so the
// parallel path can be judged on the machine at hand.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef PKH_HAVE_OPENMP
#include <omp.h>
#endif

#include "pkh/functor_f.hpp"
#include "pkh/pairing.hpp"
#include "pkh/pillowcase_cat.hpp"
#include "pkh/tangle.hpp"
#include "pkh/twisted.hpp"
#include "test_diagrams.hpp"

using namespace pkh;

namespace {

template <typename F>
double ms_per_iter(int iters, F&& f) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < iters; ++i) f();
  std::chrono::duration<double, std::milli> d =
      std::chrono::steady_clock::now() - start;
  return d.count() / iters;
}

void report(const std::string& name, int iters, double par, double ser) {
  std::printf("%-34s %4d iters   parallel %9.3f ms   serial %9.3f ms   "
              "speedup %.2fx\n",
              name.c_str(), iters, par, ser, ser / par);
}

}  // namespace

int main() {
#ifdef PKH_HAVE_OPENMP
  if (const char* env = std::getenv("PKH_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
  std::printf("OpenMP enabled, %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, serial build\n");
#endif

  {
    int iters = 20;
    double par = ms_per_iter(iters, [] { verify_ainfty(); });
    double ser = ms_per_iter(iters, [] { verify_ainfty_serial(); });
    report("verify_ainfty", iters, par, ser);
  }
  for (int k = 0; k < 2; ++k) {
    int iters = 20;
    double par = ms_per_iter(iters, [k] { verify_module_relations(k); });
    double ser =
        ms_per_iter(iters, [k] { verify_module_relations_serial(k); });
    report("verify_module_relations k=" + std::to_string(k), iters, par,
           ser);
  }

  TangleDiagram t8 = testing::twist_tangle(8, true);
  TwistedComplex big = build_delta(build_cube(t8), tangle_writhe_counts(t8));
  {
    int iters = 10;
    double par = ms_per_iter(iters, [&] { verify_twisted(big); });
    double ser = ms_per_iter(iters, [&] { verify_twisted_serial(big); });
    report("verify_twisted (8 crossings)", iters, par, ser);
  }
  for (int k = 0; k < 2; ++k) {
    BigradedChainComplex c = pair(big, k);
    int iters = 10;
    double par = ms_per_iter(iters, [&] { cohomology(c); });
    double ser = ms_per_iter(iters, [&] { cohomology_serial(c); });
    report("cohomology (8 crossings) k=" + std::to_string(k), iters, par,
           ser);
  }
  return 0;
}
