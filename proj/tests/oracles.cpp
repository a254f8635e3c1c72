#include "oracles.hpp"

#include <cmath>

namespace oracle {

std::uint64_t brute_force_lattice_count(const std::vector<double>& edges,
                                        double radius) {
  const std::size_t d = edges.size();
  const double r2 = radius * radius;
  std::vector<long long> limits(d);
  for (std::size_t i = 0; i < d; ++i)
    limits[i] = static_cast<long long>(std::floor(edges[i] * radius)) + 1;

  std::vector<long long> n(d, 1);
  std::uint64_t count = 0;
  while (true) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double ratio = static_cast<double>(n[i]) / edges[i];
      sum += ratio * ratio;
    }
    if (sum <= r2) ++count;

    // Odometer increment over the bounding box.
    std::size_t axis = 0;
    while (axis < d) {
      if (++n[axis] <= limits[axis]) break;
      n[axis] = 1;
      ++axis;
    }
    if (axis == d) break;
  }
  return count;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iterations) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double wien_root(int dimension) {
  const double d = dimension;
  return bisect([d](double z) { return std::exp(z) * (d - z) - d; }, 1e-9 * d,
                d - 1e-9 * d);
}

double planck3d(double temperature, double frequency, double h, double k,
                double c) {
  constexpr double pi = 3.14159265358979323846;
  const double z = h * frequency / (k * temperature);
  return 8.0 * pi * h * frequency * frequency * frequency /
         (c * c * c * std::expm1(z));
}

}  // namespace oracle
