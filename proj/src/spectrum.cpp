#include "hyperbb/spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperbb/numerics.hpp"

namespace hyperbb {

namespace {

constexpr double kLogRootPi = 0.572364942924700087071713675676529356;
constexpr double kRootPi = 1.77245385090551602729816748334114518;
constexpr double kMaxExp = 709.0;  // ln(DBL_MAX) ~ 709.78

// ln(e^z - 1) without overflow: log(expm1 z) for small z, z + log1p(-e^-z)
// above.
double log_expm1(double z) {
  if (z < 1.0) return std::log(std::expm1(z));
  return z + std::log1p(-std::exp(-z));
}

}  // namespace

SpectralDensityValue spectral_energy_density(const SpectrumQuery& query,
                                             const PhysicalConstants& constants) {
  const int d = query.dimension;
  if (d < 2)
    throw std::domain_error(
        "spectral density requires D >= 2; the (D-1) polarization factor "
        "vanishes at D = 1");
  if (!(query.temperature > 0.0))
    throw std::domain_error("temperature must be positive");
  if (!(query.frequency > 0.0))
    throw std::domain_error("frequency must be positive");

  const double h = constants.planck_h;
  const double k = constants.boltzmann_k;
  const double c = constants.light_speed_c;
  const double nu = query.frequency;
  const double z = h * nu / (k * query.temperature);

  const double log_peak_term = d * (kLogRootPi + std::log(nu) - std::log(c));
  const double log_value = std::log(2.0 * h * (d - 1)) + log_peak_term -
                           log_gamma(0.5 * d) - log_expm1(z);

  SpectralDensityValue out;
  out.dimensionless_z = z;
  out.log_value = log_value;

  // Direct assembly is the most accurate path; take it whenever no factor
  // can leave double range (Gamma(D/2) itself overflows past d ~ 343).
  const double log_numer = d * (kLogRootPi + std::log(nu));
  const double log_denom = d * std::log(c);
  if (d <= 170 && z < 500.0 && std::abs(log_numer) < 600.0 &&
      std::abs(log_denom) < 600.0) {
    out.value = 2.0 * h * (d - 1) * std::pow(kRootPi * nu, d) /
                (std::pow(c, d) * gamma(0.5 * d) * std::expm1(z));
  } else if (log_value <= kMaxExp) {
    out.value = std::exp(log_value);
  } else {
    throw overflow_range_error(
        "spectral energy density exceeds double range; log value available",
        log_value);
  }
  return out;
}

double dimensionless_shape(int dimension, double z) {
  if (dimension < 2)
    throw std::domain_error("dimensionless_shape requires D >= 2");
  if (!(z > 0.0)) throw std::domain_error("dimensionless_shape requires z > 0");
  const double log_shape = dimension * std::log(z) - log_expm1(z);
  if (z < 500.0 && std::abs(dimension * std::log(z)) < 600.0)
    return std::pow(z, dimension) / std::expm1(z);
  return std::exp(log_shape);
}

}  // namespace hyperbb
