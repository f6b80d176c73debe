// Benchmark: serial reference counters vs the OpenMP production kernels,
// on workloads big enough that the partition loop (2D) and the
// (alpha, tau) grid (HD) dominate.  Also asserts the two implementations
// agree, so a bench run doubles as a stress check.
//
//   andre_bench            full workloads
//   andre_bench --smoke    small sizes (wired into ctest)
//   andre_bench --threads 8

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "andre/andre2d.hpp"
#include "andre/andrehd.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace andre;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(Big& result, const std::function<Big()>& fn) {
  const auto t0 = Clock::now();
  result = fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int default_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool bench_2d(std::uint64_t q, std::uint32_t index, int threads) {
  const auto f = make_field(q);
  Big ref, par1, parN;
  const double t_ref = run_ms(ref, [&] { return twod::reference::count_2d(f, index); });
  const double t_par1 = run_ms(par1, [&] { return twod::count_2d(f, index, 1); });
  const double t_parN = run_ms(parN, [&] { return twod::count_2d(f, index, threads); });
  const bool ok = ref == par1 && par1 == parN;
  std::printf("2d q=%llu index=%u      reference %9.1f ms   kernel[1t] %9.1f ms   "
              "kernel[%dt] %9.1f ms   %s\n",
              static_cast<unsigned long long>(q), index, t_ref, t_par1, threads, t_parN,
              ok ? "results agree" : "MISMATCH");
  return ok;
}

bool bench_hd(std::uint64_t q, std::uint32_t n, int threads) {
  const auto f = make_field(q);
  Big ref, par1, parN;
  const double t_ref = run_ms(ref, [&] { return hd::reference::count_hd(n, f); });
  const double t_par1 = run_ms(par1, [&] { return hd::count_hd(n, f, 1); });
  const double t_parN = run_ms(parN, [&] { return hd::count_hd(n, f, threads); });
  const bool ok = ref == par1 && par1 == parN;
  std::printf("hd q=%llu n=%u          reference %9.1f ms   kernel[1t] %9.1f ms   "
              "kernel[%dt] %9.1f ms   %s\n",
              static_cast<unsigned long long>(q), n, t_ref, t_par1, threads, t_parN,
              ok ? "results agree" : "MISMATCH");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool smoke = false;
  int threads = default_threads();
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--smoke")) {
      smoke = true;
    } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: andre_bench [--smoke] [--threads N]\n";
      return 2;
    }
  }
  if (threads < 1) threads = 1;

  bool ok = true;
  if (smoke) {
    ok &= bench_2d(31, 7, threads);
    ok &= bench_hd(127, 5, threads);
  } else {
    ok &= bench_2d(1021, 45, threads);
    ok &= bench_hd(8191, 11, threads);
  }
  return ok ? 0 : 1;
}
