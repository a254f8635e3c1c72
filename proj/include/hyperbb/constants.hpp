#pragma once

#include <stdexcept>

namespace hyperbb {

// Physical constants used by every dimensional formula in the library.
// Defaults are the exact values fixed by the 2019 SI redefinition, so all
// derived quantities are reproducible bit for bit.
struct PhysicalConstants {
  double planck_h = 6.62607015e-34;    // J s
  double boltzmann_k = 1.380649e-23;   // J / K
  double light_speed_c = 299792458.0;  // m / s
};

inline constexpr PhysicalConstants si_constants{};

inline PhysicalConstants default_constants() { return si_constants; }

// h = k = c = 1; strips dimensional clutter from hand checks.
inline PhysicalConstants natural_units() { return {1.0, 1.0, 1.0}; }

inline PhysicalConstants make_constants(double planck_h, double boltzmann_k,
                                        double light_speed_c) {
  if (!(planck_h > 0.0) || !(boltzmann_k > 0.0) || !(light_speed_c > 0.0))
    throw std::domain_error("physical constants must be strictly positive");
  return {planck_h, boltzmann_k, light_speed_c};
}

}  // namespace hyperbb
