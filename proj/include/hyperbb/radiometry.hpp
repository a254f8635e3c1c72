#pragma once

#include "hyperbb/constants.hpp"

namespace hyperbb {

// The two radiation constants of the D-dimensional blackbody laws
//   total energy density  rho_T = a_D T^{D+1}
//   total radiance        R_T   = sigma_D T^{D+1}
// together with the dimensionless factor f_D relating them,
// sigma_D = f_D c a_D.  The log fields stay finite far past the point where
// the linear values leave double range (valid at least to D = 64).
struct RadiationConstants {
  int dimension = 0;
  double a_D = 0.0;        // J m^{-D} K^{-(D+1)}
  double sigma_D = 0.0;    // W m^{-(D-1)} K^{-(D+1)}
  double log_a_D = 0.0;    // ln of the SI numeric value
  double log_sigma_D = 0.0;
  double geometric_factor_f_D = 0.0;  // D 2^{D-2} Gamma(D/2)^2 / (pi Gamma(D+1))
};

RadiationConstants radiation_constants(int dimension,
                                       const PhysicalConstants& constants);

// a_D T^{D+1}, assembled in log domain.
double total_energy_density(int dimension, double temperature,
                            const PhysicalConstants& constants);

// sigma_D T^{D+1}, assembled in log domain.
double total_radiance(int dimension, double temperature,
                      const PhysicalConstants& constants);

// Relative discrepancy between the numerically integrated spectral density
// and the closed form a_D T^{D+1}.  The integral substitutes z = h nu / k T
// and runs through bose_integral, whose evaluation path is independent of
// the gamma/zeta product in a_D; agreement to ~1e-10 is therefore a real
// two-route consistency check.
double verify_density_by_quadrature(int dimension, double temperature,
                                    const PhysicalConstants& constants);

}  // namespace hyperbb
