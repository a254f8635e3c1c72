#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "hyperbb/numerics.hpp"
#include "oracles.hpp"

using namespace hyperbb;

namespace {
constexpr double kRootPi = 1.7724538509055160273;
}

TEST_CASE("gamma at fixed points") {
  CHECK(hyperbb::gamma(0.5) == doctest::Approx(kRootPi).epsilon(1e-13));
  CHECK(hyperbb::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  // 15 sqrt(pi) / 8
  CHECK(hyperbb::gamma(3.5) == doctest::Approx(3.3233509704478425).epsilon(1e-13));
  CHECK(hyperbb::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(hyperbb::gamma(30.0) == doctest::Approx(8.841761993739702e30).epsilon(1e-13));
  // Sweep points pinned from a 30-digit reference.
  CHECK(hyperbb::gamma(0.1) == doctest::Approx(9.513507698668732).epsilon(1e-13));
  CHECK(hyperbb::gamma(0.75) == doctest::Approx(1.2254167024651776).epsilon(1e-13));
  CHECK(hyperbb::gamma(1.4616321449683622) ==  // the minimum
        doctest::Approx(0.8856031944108887).epsilon(1e-13));
  CHECK(hyperbb::gamma(7.25) == doctest::Approx(1155.3810139199898).epsilon(1e-13));
  CHECK(hyperbb::gamma(22.5) ==
        doctest::Approx(2.3828015944641842e20).epsilon(1e-13));
}

TEST_CASE("gamma rejects the nonpositive domain") {
  CHECK_THROWS_AS(hyperbb::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(hyperbb::gamma(-1.5), std::domain_error);
}

TEST_CASE("gamma recurrence property") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.5, 20.0);
  for (int i = 0; i < 100; ++i) {
    const double x = xs(rng);
    CHECK(hyperbb::gamma(x + 1.0) == doctest::Approx(x * hyperbb::gamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("log_gamma values and consistency with gamma") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-13);
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
  // ln(100!), from an exact big-integer factorial
  CHECK(log_gamma(101.0) ==
        doctest::Approx(363.73937555556347).epsilon(1e-12));
  CHECK(log_gamma(1e6) ==
        doctest::Approx(12815504.569147611).epsilon(1e-12));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> xs(0.5, 30.0);
  for (int i = 0; i < 100; ++i) {
    const double x = xs(rng);
    CHECK(std::exp(log_gamma(x)) == doctest::Approx(hyperbb::gamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("riemann zeta fixed points") {
  constexpr double pi = 3.14159265358979323846;
  CHECK(riemann_zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-12));
  CHECK(riemann_zeta(4.0) ==
        doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-12));
  CHECK(riemann_zeta(3.0) ==
        doctest::Approx(1.2020569031595943).epsilon(1e-12));
  CHECK(riemann_zeta(65.0) == doctest::Approx(1.0).epsilon(1e-12));
  // Near the pole and at a half-integer, against a 30-digit reference.
  CHECK(riemann_zeta(1.001) ==
        doctest::Approx(1000.5772884759015).epsilon(1e-12));
  CHECK(riemann_zeta(1.5) == doctest::Approx(2.612375348685488).epsilon(1e-12));
  CHECK(riemann_zeta(9.5) ==
        doctest::Approx(1.0014125906121736).epsilon(1e-12));
  CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(riemann_zeta(0.5), std::domain_error);
}

TEST_CASE("riemann zeta decreases on (1.1, 20)") {
  double previous = riemann_zeta(1.1);
  for (double s = 1.2; s <= 20.0; s += 0.1) {
    const double value = riemann_zeta(s);
    CHECK(value < previous);
    previous = value;
  }
}

TEST_CASE("bose integral fixed points") {
  constexpr double pi = 3.14159265358979323846;
  CHECK(bose_integral(3.0) ==
        doctest::Approx(std::pow(pi, 4) / 15.0).epsilon(1e-10));
  CHECK(bose_integral(1.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-10));
  CHECK(bose_integral(5.0) ==
        doctest::Approx(122.08116743813390).epsilon(1e-10));
  CHECK_THROWS_AS(bose_integral(0.0), std::domain_error);
  CHECK_THROWS_AS(bose_integral(-2.0), std::domain_error);
}

TEST_CASE("bose integral agrees with gamma * zeta across integer orders") {
  // Two independent computation paths; this is the identity the radiometry
  // cross-check leans on.
  for (int p = 1; p <= 12; ++p) {
    const double via_product = hyperbb::gamma(p + 1.0) * riemann_zeta(p + 1.0);
    CHECK(bose_integral(double(p)) ==
          doctest::Approx(via_product).epsilon(1e-10));
  }
}

TEST_CASE("bose integral quadrature path handles non-integer orders") {
  for (double p : {0.5, 2.5, 7.25}) {
    const double via_product = hyperbb::gamma(p + 1.0) * riemann_zeta(p + 1.0);
    CHECK(bose_integral(p) == doctest::Approx(via_product).epsilon(1e-10));
  }
  CHECK(bose_integral(2.5) == doctest::Approx(3.7445320913845909).epsilon(1e-10));
}

TEST_CASE("solve_bracketed on known roots") {
  RealTolerance tol{1e-12, 0.0, 200};
  const double root2 =
      solve_bracketed([](double x) { return x * x - 2.0; }, {1.0, 2.0}, tol);
  CHECK(root2 == doctest::Approx(1.4142135623730951).epsilon(1e-12));

  const double wien3 = solve_bracketed(
      [](double x) { return std::exp(x) * (3.0 - x) - 3.0; }, {0.1, 2.999},
      tol);
  const double reference = oracle::bisect(
      [](double x) { return std::exp(x) * (3.0 - x) - 3.0; }, 0.1, 2.999);
  CHECK(wien3 == doctest::Approx(2.8214393721220787).epsilon(1e-11));
  CHECK(wien3 == doctest::Approx(reference).epsilon(1e-11));
}

TEST_CASE("solve_bracketed error paths") {
  RealTolerance tol{1e-12, 0.0, 200};
  CHECK_THROWS_AS(
      solve_bracketed([](double x) { return x; }, {1.0, 2.0}, tol),
      no_sign_change_error);
  CHECK_THROWS_AS(
      solve_bracketed([](double x) { return x * x - 2.0; }, {2.0, 1.0}, tol),
      std::domain_error);
  RealTolerance starved{1e-15, 0.0, 3};
  CHECK_THROWS_AS(solve_bracketed([](double x) { return std::cos(x) - x; },
                                  {0.0, 10.0}, starved),
                  convergence_error);
  RealTolerance bad{0.0, 0.0, 100};
  CHECK_THROWS_AS(solve_bracketed([](double x) { return x - 1.0; },
                                  {0.0, 2.0}, bad),
                  std::domain_error);
}

TEST_CASE("solve_bracketed keeps roots inside the tolerance window") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> roots(-5.0, 5.0);
  RealTolerance tol{1e-11, 1e-13, 200};
  for (int i = 0; i < 50; ++i) {
    const double target = roots(rng);
    const auto f = [target](double x) {
      return (x - target) * (1.0 + 0.1 * std::sin(x));
    };
    const double found = solve_bracketed(f, {target - 3.0, target + 2.5}, tol);
    const double window = tol.relative * std::abs(found) + tol.absolute;
    CHECK(std::abs(found - target) <= 2.0 * window + 1e-12);
    // The final window still straddles the sign change.
    const double left = f(found - 2.0 * window - 1e-12);
    const double right = f(found + 2.0 * window + 1e-12);
    CHECK(left * right <= 0.0);
  }
}
