#include "hyperbb/radiometry.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperbb/numerics.hpp"

namespace hyperbb {

namespace {

constexpr double kLogPi = 1.14472988584940017414342735135305871;
constexpr double kLog2 = 0.693147180559945309417232121458176568;

void check_domain(int dimension, double temperature) {
  if (dimension < 2)
    throw std::domain_error("radiation constants require D >= 2");
  if (!(temperature > 0.0))
    throw std::domain_error("temperature must be positive");
}

// ln a_D for a_D = 2 (D-1) k^{D+1} / Gamma(D/2) * (sqrt(pi)/(c h))^D
//                  * zeta(D+1) * Gamma(D+1).
double log_a(int d, const PhysicalConstants& pc) {
  return kLog2 + std::log(double(d - 1)) + (d + 1) * std::log(pc.boltzmann_k) -
         log_gamma(0.5 * d) +
         d * (0.5 * kLogPi - std::log(pc.light_speed_c) -
              std::log(pc.planck_h)) +
         std::log(riemann_zeta(double(d + 1))) + log_gamma(double(d + 1));
}

// ln sigma_D for sigma_D = D (D-1) c k / (2 pi) * (2 sqrt(pi) k / (c h))^D
//                          * Gamma(D/2) * zeta(D+1).
double log_sigma(int d, const PhysicalConstants& pc) {
  return std::log(double(d)) + std::log(double(d - 1)) +
         std::log(pc.light_speed_c) + std::log(pc.boltzmann_k) - kLog2 -
         kLogPi +
         d * (kLog2 + 0.5 * kLogPi + std::log(pc.boltzmann_k) -
              std::log(pc.light_speed_c) - std::log(pc.planck_h)) +
         log_gamma(0.5 * d) + std::log(riemann_zeta(double(d + 1)));
}

}  // namespace

RadiationConstants radiation_constants(int dimension,
                                       const PhysicalConstants& constants) {
  if (dimension < 2)
    throw std::domain_error("radiation constants require D >= 2");

  RadiationConstants rc;
  rc.dimension = dimension;
  rc.log_a_D = log_a(dimension, constants);
  rc.log_sigma_D = log_sigma(dimension, constants);
  rc.a_D = std::exp(rc.log_a_D);
  rc.sigma_D = std::exp(rc.log_sigma_D);
  const double log_f = std::log(double(dimension)) + (dimension - 2) * kLog2 +
                       2.0 * log_gamma(0.5 * dimension) - kLogPi -
                       log_gamma(double(dimension + 1));
  rc.geometric_factor_f_D = std::exp(log_f);
  return rc;
}

double total_energy_density(int dimension, double temperature,
                            const PhysicalConstants& constants) {
  check_domain(dimension, temperature);
  return std::exp(log_a(dimension, constants) +
                  (dimension + 1) * std::log(temperature));
}

double total_radiance(int dimension, double temperature,
                      const PhysicalConstants& constants) {
  check_domain(dimension, temperature);
  return std::exp(log_sigma(dimension, constants) +
                  (dimension + 1) * std::log(temperature));
}

double verify_density_by_quadrature(int dimension, double temperature,
                                    const PhysicalConstants& constants) {
  check_domain(dimension, temperature);
  const int d = dimension;
  const PhysicalConstants& pc = constants;

  // Integral of rho_T over all frequencies, substituting z = h nu / k T:
  // 2 h (D-1) pi^{D/2} / (c^D Gamma(D/2)) * (k T / h)^{D+1} * B(D)
  // with B the Bose-Einstein integral.
  const double log_quad =
      kLog2 + std::log(pc.planck_h) + std::log(double(d - 1)) +
      d * (0.5 * kLogPi - std::log(pc.light_speed_c)) - log_gamma(0.5 * d) +
      (d + 1) * (std::log(pc.boltzmann_k) + std::log(temperature) -
                 std::log(pc.planck_h)) +
      std::log(bose_integral(double(d)));

  const double log_closed = log_a(d, pc) + (d + 1) * std::log(temperature);
  return std::abs(std::expm1(log_quad - log_closed));
}

}  // namespace hyperbb
