#include <cmath>

#include <doctest.h>

#include "hyperbb/constants.hpp"
#include "hyperbb/numerics.hpp"
#include "hyperbb/radiometry.hpp"

using namespace hyperbb;

namespace {
constexpr double kPi = 3.14159265358979323846;
const PhysicalConstants kSI = default_constants();
}  // namespace

TEST_CASE("sigma_3 reproduces the SI Stefan-Boltzmann constant") {
  const RadiationConstants rc = radiation_constants(3, kSI);
  const double textbook = 2.0 * std::pow(kPi, 5) * std::pow(kSI.boltzmann_k, 4) /
                          (15.0 * kSI.light_speed_c * kSI.light_speed_c *
                           std::pow(kSI.planck_h, 3));
  CHECK(rc.sigma_D == doctest::Approx(textbook).epsilon(1e-12));
  CHECK(rc.sigma_D == doctest::Approx(5.670374419184429e-8).epsilon(1e-12));
  CHECK(rc.a_D == doctest::Approx(4.0 * rc.sigma_D / kSI.light_speed_c)
                      .epsilon(1e-12));
  CHECK(rc.a_D == doctest::Approx(7.565733250280005e-16).epsilon(1e-12));
  CHECK(rc.geometric_factor_f_D == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("D = 2 closed forms") {
  const RadiationConstants rc = radiation_constants(2, kSI);
  // sigma_2 = 4 k^3 zeta(3) / (c h^2)
  const double sigma2 = 4.0 * std::pow(kSI.boltzmann_k, 3) *
                        riemann_zeta(3.0) /
                        (kSI.light_speed_c * kSI.planck_h * kSI.planck_h);
  CHECK(rc.sigma_D == doctest::Approx(sigma2).epsilon(1e-12));
  CHECK(rc.sigma_D == doctest::Approx(9.613955430050372e-11).epsilon(1e-12));
  CHECK(rc.geometric_factor_f_D ==
        doctest::Approx(1.0 / kPi).epsilon(1e-13));
}

TEST_CASE("natural-unit a_2 from the closed form") {
  // 2 (D-1) k^{D+1} / Gamma(D/2) (sqrt(pi)/(c h))^D zeta(D+1) Gamma(D+1)
  // at D = 2, h = k = c = 1: 2 * pi * zeta(3) * 2.
  const RadiationConstants rc = radiation_constants(2, natural_units());
  CHECK(rc.a_D == doctest::Approx(4.0 * kPi * riemann_zeta(3.0)).epsilon(1e-12));
  CHECK(rc.a_D == doctest::Approx(15.105492544652316).epsilon(1e-12));
}

TEST_CASE("radiometry domain checks") {
  CHECK_THROWS_AS(radiation_constants(1, kSI), std::domain_error);
  CHECK_THROWS_AS(total_energy_density(1, 300.0, kSI), std::domain_error);
  CHECK_THROWS_AS(total_energy_density(3, 0.0, kSI), std::domain_error);
  CHECK_THROWS_AS(total_radiance(3, -2.0, kSI), std::domain_error);
  CHECK_THROWS_AS(verify_density_by_quadrature(1, 300.0, kSI),
                  std::domain_error);
}

TEST_CASE("sigma_D = f_D c a_D for D in 2..30") {
  for (int d = 2; d <= 30; ++d) {
    const RadiationConstants rc = radiation_constants(d, kSI);
    CHECK(rc.sigma_D /
              (rc.geometric_factor_f_D * kSI.light_speed_c * rc.a_D) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("log fields stay finite and consistent out to D = 64") {
  for (int d = 2; d <= 64; ++d) {
    const RadiationConstants rc = radiation_constants(d, kSI);
    CHECK(std::isfinite(rc.log_a_D));
    CHECK(std::isfinite(rc.log_sigma_D));
    // Up to D = 64 the SI values themselves stay inside double range.
    CHECK(rc.a_D > 0.0);
    CHECK(rc.sigma_D > 0.0);
    CHECK(std::isfinite(rc.a_D));
    CHECK(std::isfinite(rc.sigma_D));
    CHECK(std::exp(rc.log_a_D) == doctest::Approx(rc.a_D).epsilon(1e-12));
    CHECK(std::exp(rc.log_sigma_D) ==
          doctest::Approx(rc.sigma_D).epsilon(1e-12));
  }
}

TEST_CASE("total energy density fixtures") {
  CHECK(total_energy_density(3, 300.0, kSI) ==
        doctest::Approx(6.128243932726804e-6).epsilon(1e-11));
  // Power law: doubling T multiplies by 2^{D+1} = 16 at D = 3.
  CHECK(total_energy_density(3, 600.0, kSI) /
            total_energy_density(3, 300.0, kSI) ==
        doctest::Approx(16.0).epsilon(1e-13));
  const double a2_nat = radiation_constants(2, natural_units()).a_D;
  CHECK(total_energy_density(2, 1.0, natural_units()) ==
        doctest::Approx(a2_nat).epsilon(1e-13));
}

TEST_CASE("total radiance fixtures") {
  CHECK(total_radiance(3, 5772.0, kSI) ==
        doctest::Approx(6.293859247033595e7).epsilon(1e-11));
  CHECK(total_radiance(3, 1.0, kSI) ==
        doctest::Approx(radiation_constants(3, kSI).sigma_D).epsilon(1e-13));
}

TEST_CASE("radiance power law and log-log slope") {
  for (int d = 2; d <= 10; ++d) {
    for (double m : {10.0, 100.0}) {
      CHECK(total_radiance(d, m * 1.0, kSI) / total_radiance(d, 1.0, kSI) ==
            doctest::Approx(std::pow(m, d + 1)).epsilon(1e-12));
    }
    const double slope =
        (std::log(total_radiance(d, 100.0, kSI)) -
         std::log(total_radiance(d, 1.0, kSI))) /
        std::log(100.0);
    CHECK(slope == doctest::Approx(double(d + 1)).epsilon(1e-12));
  }
}

TEST_CASE("quadrature route agrees with the closed form") {
  for (int d = 2; d <= 12; ++d) {
    for (double temperature : {1.0, 300.0, 5000.0}) {
      CHECK(verify_density_by_quadrature(d, temperature, kSI) <= 1e-9);
    }
  }
  CHECK(verify_density_by_quadrature(2, 1.0, natural_units()) <= 1e-10);
  CHECK(verify_density_by_quadrature(3, 300.0, kSI) <= 1e-10);
}
