#pragma once

#include <optional>

#include "hyperbb/constants.hpp"
#include "hyperbb/numerics.hpp"

namespace hyperbb {

struct WienSolution {
  int dimension = 0;
  double z_peak = 0.0;  // nontrivial root of e^z = D / (D - z), in (0, D)
  std::optional<double> peak_frequency;  // Hz, z_peak k T / h
  std::optional<double> temperature;     // K
};

// Solves the displacement condition e^z (D - z) = D for its nontrivial
// root.  D = 1 is rejected: the spectral density vanishes identically there.
WienSolution solve_wien(int dimension, const RealTolerance& tolerance = {});

// Peak frequency of the spectral density at the given temperature,
// nu_max = z_D k T / h.
WienSolution peak_frequency(int dimension, double temperature,
                            const PhysicalConstants& constants,
                            const RealTolerance& tolerance = {});

}  // namespace hyperbb
