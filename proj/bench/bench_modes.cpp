// Compares the OpenMP mode-counting kernel against the serial reference on
// growing lattice radii and reports wall time plus speedup.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyperbb/cavity.hpp"

namespace {

using Clock = std::chrono::steady_clock;

// Best of three runs; one-shot timings on a busy machine are too noisy.
double time_ms(const std::function<std::uint64_t()>& fn, std::uint64_t& out) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = Clock::now();
    out = fn();
    const auto stop = Clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-4s %-8s %14s %12s %12s %8s\n", "D", "radius", "count",
              "serial ms", "parallel ms", "speedup");

  struct Config {
    int dimension;
    double radius;
  };
  const std::vector<Config> configs = {
      {2, 2000.0}, {2, 8000.0}, {3, 300.0}, {3, 800.0}, {4, 120.0},
  };

  for (const Config& cfg : configs) {
    const hyperbb::CavityGeometry geometry(
        std::vector<double>(cfg.dimension, 1.0));
    std::uint64_t serial_count = 0, parallel_count = 0;
    const double serial_ms = time_ms(
        [&] {
          return hyperbb::count_modes_exact_radius_serial(geometry, cfg.radius);
        },
        serial_count);
    const double parallel_ms = time_ms(
        [&] { return hyperbb::count_modes_exact_radius(geometry, cfg.radius); },
        parallel_count);
    if (serial_count != parallel_count) {
      std::printf("MISMATCH at D=%d r=%g: serial %llu parallel %llu\n",
                  cfg.dimension, cfg.radius,
                  static_cast<unsigned long long>(serial_count),
                  static_cast<unsigned long long>(parallel_count));
      return 1;
    }
    std::printf("%-4d %-8g %14llu %12.2f %12.2f %7.2fx\n", cfg.dimension,
                cfg.radius, static_cast<unsigned long long>(serial_count),
                serial_ms, parallel_ms, serial_ms / parallel_ms);
  }
  return 0;
}
