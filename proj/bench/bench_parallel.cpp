// Serial reference (enumerate) versus the OpenMP root-split driver.
//
//   bench_parallel [n ...]
//
// Prints one row per (n, threads) with wall time, speedup over the serial
// run and whether the merged output matched.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "productsum/parallel.hpp"

using productsum::EnumConfig;
using h_clock = std::chrono::steady_clock;

template <class F>
static double timed(F&& f) {
  auto t1 = h_clock::now();
  f();
  return std::chrono::duration<double>(h_clock::now() - t1).count();
}

int main(int argc, char** argv) {
  std::vector<std::uint64_t> sizes;
  for (int a = 1; a < argc; ++a) sizes.push_back(std::strtoull(argv[a], nullptr, 10));
  if (sizes.empty()) sizes = {7294, 31278, 124158, 1030986, 10027888};

  const int max_threads = omp_get_num_procs();
  std::printf("%12s %8s %12s %10s %8s %8s\n", "n", "threads", "theta", "seconds", "speedup", "match");
  for (std::uint64_t n : sizes) {
    const EnumConfig config{.n = n};
    productsum::ParallelResult serial;
    const double t_serial = timed([&] { serial = productsum::run_sequential(config); });
    std::printf("%12llu %8s %12llu %10.3f %8s %8s\n", static_cast<unsigned long long>(n), "serial",
                static_cast<unsigned long long>(serial.stats.theta), t_serial, "1.00", "-");

    for (int threads = 1; threads <= std::max(8, max_threads); threads *= 2) {
      productsum::ParallelResult par;
      const double t = timed([&] { par = productsum::run_parallel(config, threads); });
      const bool match = par.solutions == serial.solutions && par.stats == serial.stats;
      std::printf("%12llu %8d %12llu %10.3f %8.2f %8s\n", static_cast<unsigned long long>(n), threads,
                  static_cast<unsigned long long>(par.stats.theta), t, t_serial / t, match ? "yes" : "NO");
    }
  }
  return 0;
}
