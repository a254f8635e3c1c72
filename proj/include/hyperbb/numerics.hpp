#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <stdexcept>
#include <string>

#include "hyperbb/errors.hpp"

namespace hyperbb {

struct RealTolerance {
  double relative = 1e-12;
  double absolute = 0.0;
  int max_iterations = 200;
};

inline void validate(const RealTolerance& tol) {
  if (!(tol.relative > 0.0) || !(tol.relative < 1.0))
    throw std::domain_error("tolerance.relative must lie in (0, 1)");
  if (!(tol.absolute >= 0.0))
    throw std::domain_error("tolerance.absolute must be >= 0");
  if (tol.max_iterations < 1)
    throw std::domain_error("tolerance.max_iterations must be >= 1");
}

struct Bracket {
  double lo;
  double hi;
};

// Gamma function for x > 0.  Lanczos approximation (g = 7, 9 coefficients),
// relative error below 1e-13 throughout the supported range; arguments past
// ~171.6 overflow, use log_gamma there.
double gamma(double x);

// ln Gamma(x) for x > 0.  Stirling series with Bernoulli correction terms
// for x >= 12, argument recurrence below.
double log_gamma(double x);

// Riemann zeta for s > 1 via the accelerated alternating (eta) series of
// Borwein; truncation error is provably below 1e-15 on the whole domain.
double riemann_zeta(double s);

// Integral of z^p / (e^z - 1) over (0, inf) for p > 0.  Equals
// Gamma(p+1) * zeta(p+1), but evaluated by a path that shares no code with
// gamma() or riemann_zeta(): Bernoulli expansion of the kernel on [0,1]
// plus a sum of exponential tail integrals (incomplete-gamma recurrence for
// integer p, adaptive Gauss-Kronrod quadrature otherwise).  This keeps the
// radiometry cross-check a genuine two-path comparison.
double bose_integral(double p);

namespace detail {

// Adaptive Gauss-Kronrod (7/15) panel integration on a finite interval.
double gauss_kronrod_adaptive(const std::function<double(double)>& f, double a,
                              double b, double relative_tolerance);

}  // namespace detail

// Safeguarded hybrid root finder: secant steps clipped to the current
// bracket, with a bisection fallback whenever the step escapes the bracket
// or fails to shrink it fast enough.  The sign-change invariant holds on
// every iteration, so convergence is guaranteed for continuous f.
template <typename F>
  requires std::invocable<F&, double>
double solve_bracketed(F&& f, Bracket bracket, const RealTolerance& tol = {}) {
  validate(tol);
  double lo = bracket.lo, hi = bracket.hi;
  if (!(lo < hi)) throw std::domain_error("bracket requires lo < hi");

  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw no_sign_change_error("solve_bracketed: f(lo) and f(hi) have the same sign");

  // Secant memory: the two most recent evaluations.
  double x0 = lo, f0 = flo;
  double x1 = hi, f1 = fhi;
  double width_two_ago = hi - lo;

  for (int iter = 0; iter < tol.max_iterations; ++iter) {
    double width = hi - lo;
    double mid = lo + 0.5 * width;
    if (width <= tol.relative * std::abs(mid) + tol.absolute)
      return std::abs(flo) <= std::abs(fhi) ? lo : hi;

    double x = mid;
    const double df = f1 - f0;
    if (df != 0.0) {
      const double step = f1 * (x1 - x0) / df;
      const double candidate = x1 - step;
      // Take the secant point only when it stays strictly inside the
      // bracket and the bracket has been shrinking at bisection rate.
      if (candidate > lo && candidate < hi && width <= 0.5 * width_two_ago)
        x = candidate;
    }
    width_two_ago = (iter % 2 == 0) ? width : width_two_ago;

    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    x0 = x1;
    f0 = f1;
    x1 = x;
    f1 = fx;
  }
  throw convergence_error("solve_bracketed: no convergence after " +
                          std::to_string(tol.max_iterations) + " iterations");
}

}  // namespace hyperbb
