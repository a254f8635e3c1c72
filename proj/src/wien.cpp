#include "hyperbb/wien.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperbb {

WienSolution solve_wien(int dimension, const RealTolerance& tolerance) {
  if (dimension < 2)
    throw std::domain_error(
        "Wien displacement requires D >= 2; the (D-1) factor makes the "
        "spectrum vanish at D = 1");
  validate(tolerance);

  const double d = dimension;
  // Same root as e^z (D - z) = D, rescaled by e^{-z} so both endpoints are
  // finite for any D: g(z) = (D - z) - D e^{-z}, with g > 0 just above the
  // trivial root z = 0 and g < 0 at the far end.
  const auto g = [d](double z) { return (d - z) - d * std::exp(-z); };

  const double margin = 1e-9 * d;
  double hi = d - margin;
  if (!(g(hi) < 0.0)) {
    // For large D the root sits within margin of D; z = D still has
    // g = -D e^{-D} < 0.
    hi = d;
  }
  double z = solve_bracketed(g, Bracket{margin, hi}, tolerance);

  // Newton polish on g (g' = -1 + D e^{-z}, strictly negative at the root)
  // takes the bracketed result to the correctly rounded double.
  for (int i = 0; i < 3; ++i) {
    const double gp = -1.0 + d * std::exp(-z);
    const double step = g(z) / gp;
    const double next = z - step;
    if (!(next > 0.0) || !(next <= d) || next == z) break;
    z = next;
  }

  WienSolution solution;
  solution.dimension = dimension;
  solution.z_peak = z;
  return solution;
}

WienSolution peak_frequency(int dimension, double temperature,
                            const PhysicalConstants& constants,
                            const RealTolerance& tolerance) {
  if (!(temperature > 0.0))
    throw std::domain_error("temperature must be positive");
  WienSolution solution = solve_wien(dimension, tolerance);
  solution.temperature = temperature;
  solution.peak_frequency = solution.z_peak * constants.boltzmann_k *
                            temperature / constants.planck_h;
  return solution;
}

}  // namespace hyperbb
