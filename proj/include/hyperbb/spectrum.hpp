#pragma once

#include "hyperbb/constants.hpp"
#include "hyperbb/errors.hpp"

namespace hyperbb {

struct SpectrumQuery {
  int dimension;       // D >= 2; the (D-1) polarization factor kills D = 1
  double temperature;  // K, > 0
  double frequency;    // Hz, > 0
};

struct SpectralDensityValue {
  double value;            // J s m^{-D}
  double dimensionless_z;  // h nu / k T
  double log_value;        // ln of value; finite even when value under/overflows
};

// Planck spectral energy density in D spatial dimensions,
//   rho_T(nu) = 2 h (D-1) (sqrt(pi) nu)^D / (c^D Gamma(D/2) (e^z - 1)),
// z = h nu / k T.  Assembled linearly when every factor is in double range,
// otherwise in log domain; overflow beyond double range raises
// overflow_range_error carrying the log value.
SpectralDensityValue spectral_energy_density(const SpectrumQuery& query,
                                             const PhysicalConstants& constants);

// The dimensionless spectral shape z^D / (e^z - 1); expm1-stable near
// z -> 0 and log-domain for large z.
double dimensionless_shape(int dimension, double z);

}  // namespace hyperbb
