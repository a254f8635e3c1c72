#include <doctest.h>

#include "hyperbb/constants.hpp"

using namespace hyperbb;

TEST_CASE("default constants carry the exact SI-defined values") {
  const PhysicalConstants pc = default_constants();
  CHECK(pc.planck_h == 6.62607015e-34);
  CHECK(pc.boltzmann_k == 1.380649e-23);
  CHECK(pc.light_speed_c == 299792458.0);

  // Single source of truth: every call site sees the same instance.
  const PhysicalConstants again = default_constants();
  CHECK(again.planck_h == pc.planck_h);
  CHECK(again.boltzmann_k == pc.boltzmann_k);
  CHECK(again.light_speed_c == pc.light_speed_c);
  CHECK(si_constants.planck_h == pc.planck_h);
}

TEST_CASE("natural-unit override") {
  const PhysicalConstants pc = natural_units();
  CHECK(pc.planck_h == 1.0);
  CHECK(pc.boltzmann_k == 1.0);
  CHECK(pc.light_speed_c == 1.0);
}

TEST_CASE("constants must be strictly positive") {
  CHECK_THROWS_AS(make_constants(1.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_constants(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(make_constants(1.0, 1.0, 0.0), std::domain_error);
  const PhysicalConstants ok = make_constants(2.0, 3.0, 4.0);
  CHECK(ok.planck_h == 2.0);
  CHECK(ok.boltzmann_k == 3.0);
  CHECK(ok.light_speed_c == 4.0);
}
