#include "hyperbb/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperbb/numerics.hpp"

namespace hyperbb {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Largest n >= 0 with n^2 * weight <= budget.  The floor of the square root
// is only a seed; the final value is fixed against the same floating
// predicate the enumeration uses, so boundary ties are handled identically
// everywhere.
long long axis_max(double budget, double weight) {
  if (!(budget >= weight)) return 0;  // n = 1 already infeasible
  long long m = static_cast<long long>(std::floor(std::sqrt(budget / weight)));
  while (static_cast<double>(m + 1) * static_cast<double>(m + 1) * weight <=
         budget)
    ++m;
  while (m > 0 &&
         static_cast<double>(m) * static_cast<double>(m) * weight > budget)
    --m;
  return m;
}

// Counts assignments of axes [axis, D) given the remaining budget
// r^2 - sum of already-fixed (n_j/l_j)^2.  suffix_min[i] is the minimal
// contribution of axes [i, D) (all n = 1), used to prune infeasible
// prefixes without descending into them.
std::uint64_t count_slice(const std::vector<double>& weights,
                          const std::vector<double>& suffix_min,
                          std::size_t axis, double budget) {
  const double w = weights[axis];
  if (axis + 1 == weights.size())
    return static_cast<std::uint64_t>(axis_max(budget, w));

  const long long nmax = axis_max(budget - suffix_min[axis + 1], w);
  std::uint64_t total = 0;
  for (long long n = 1; n <= nmax; ++n) {
    const double used = static_cast<double>(n) * static_cast<double>(n) * w;
    total += count_slice(weights, suffix_min, axis + 1, budget - used);
  }
  return total;
}

struct EnumerationSetup {
  std::vector<double> weights;     // per-axis (scale/l_i)^2
  std::vector<double> suffix_min;  // suffix sums of weights, plus terminal 0
  double budget;                   // (scale * r)^2
};

// When every edge is a small integer and the scaled radius is integral, the
// whole enumeration can run on exactly representable integers inside
// doubles: weights (L/l_i)^2 and budget (rL)^2 stay below 2^53, so every
// comparison is exact and boundary ties are decided exactly.  Otherwise the
// raw double predicate applies (ties resolved by <= on doubles).
EnumerationSetup make_setup(const CavityGeometry& geometry, double radius) {
  const auto& edges = geometry.edges();
  EnumerationSetup s;
  s.weights.resize(edges.size());

  bool integral_edges = true;
  for (double e : edges)
    if (!(e == std::floor(e)) || e < 1.0 || e > 1e6) integral_edges = false;

  bool exact = false;
  if (integral_edges) {
    unsigned long long lcm = 1;
    for (double e : edges) {
      const auto ei = static_cast<unsigned long long>(e);
      lcm = std::lcm(lcm, ei);
      if (lcm > 1'000'000ull) break;
    }
    const double scaled_radius = radius * static_cast<double>(lcm);
    if (lcm <= 1'000'000ull && scaled_radius == std::floor(scaled_radius) &&
        scaled_radius <= 6.0e7) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const double a = static_cast<double>(lcm) / edges[i];
        s.weights[i] = a * a;
      }
      s.budget = scaled_radius * scaled_radius;
      exact = true;
    }
  }
  if (!exact) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const double inv = 1.0 / edges[i];
      s.weights[i] = inv * inv;
    }
    s.budget = radius * radius;
  }

  s.suffix_min.assign(s.weights.size() + 1, 0.0);
  for (std::size_t i = s.weights.size(); i-- > 0;)
    s.suffix_min[i] = s.suffix_min[i + 1] + s.weights[i];
  return s;
}

void check_budget(const CavityGeometry& geometry, double radius,
                  std::uint64_t budget) {
  const int d = geometry.dimension();
  const double ellipsoid_octant =
      std::exp(std::log(hyper_solid_angle(d)) - std::log(double(d)) +
               d * (std::log(characteristic_length(geometry)) +
                    std::log(radius) - std::log(2.0)));
  // The bounding box n_i <= l_i r is an exact upper bound and much tighter
  // than the inflated volume estimate at small radii.
  double box = 1.0;
  for (double e : geometry.edges()) box *= std::floor(e * radius);
  const double predicted = std::min(box, ellipsoid_octant * 1.3 + 16.0);
  if (predicted > static_cast<double>(budget))
    throw enumeration_budget_error(
        "mode enumeration would visit ~" + std::to_string(predicted) +
        " lattice sites, over the budget of " + std::to_string(budget));
}

void check_radius(double radius) {
  if (!(radius > 0.0))
    throw std::domain_error("frequency cutoff must be positive");
}

double radius_from_cutoff(double frequency_cutoff,
                          const PhysicalConstants& constants) {
  return 2.0 * frequency_cutoff / constants.light_speed_c;
}

}  // namespace

CavityGeometry::CavityGeometry(std::vector<double> edges,
                               std::vector<std::optional<double>> compact_sizes)
    : edges_(std::move(edges)), compact_sizes_(std::move(compact_sizes)) {
  if (edges_.size() < 2)
    throw std::domain_error("cavity geometry needs at least 2 dimensions");
  for (double e : edges_)
    if (!(e > 0.0)) throw std::domain_error("cavity edges must be positive");
  if (!compact_sizes_.empty()) {
    if (compact_sizes_.size() != edges_.size())
      throw std::domain_error(
          "compact_sizes must list one entry per dimension");
    for (const auto& size : compact_sizes_)
      if (size && !(*size > 0.0))
        throw std::domain_error("compact dimension sizes must be positive");
  }
}

double mode_frequency(const CavityGeometry& geometry, const ModeIndex& mode,
                      const PhysicalConstants& constants) {
  if (static_cast<int>(mode.n.size()) != geometry.dimension())
    throw std::invalid_argument("mode index dimension does not match geometry");
  double sum = 0.0;
  for (std::size_t i = 0; i < mode.n.size(); ++i) {
    if (mode.n[i] < 1)
      throw std::domain_error("mode numbers must be >= 1");
    const double ratio = static_cast<double>(mode.n[i]) / geometry.edges()[i];
    sum += ratio * ratio;
  }
  return 0.5 * constants.light_speed_c * std::sqrt(sum);
}

double hyper_solid_angle(int dimension) {
  if (dimension < 1)
    throw std::domain_error("hyper_solid_angle requires dimension >= 1");
  return std::exp(std::log(2.0) + 0.5 * dimension * std::log(kPi) -
                  log_gamma(0.5 * dimension));
}

double characteristic_length(const CavityGeometry& geometry) {
  double log_sum = 0.0;
  for (double e : geometry.edges()) log_sum += std::log(e);
  return std::exp(log_sum / geometry.dimension());
}

CompactFitResult validate_compact_fit(const CavityGeometry& geometry) {
  CompactFitResult result;
  const auto& compact = geometry.compact_sizes();
  for (std::size_t i = 0; i < compact.size(); ++i)
    if (compact[i] && geometry.edges()[i] > *compact[i])
      result.violations.push_back(static_cast<int>(i) + 1);
  return result;
}

std::uint64_t count_modes_exact_radius_serial(const CavityGeometry& geometry,
                                              double radius,
                                              std::uint64_t budget) {
  check_radius(radius);
  check_budget(geometry, radius, budget);
  const EnumerationSetup s = make_setup(geometry, radius);
  const std::uint64_t raw = count_slice(s.weights, s.suffix_min, 0, s.budget);
  return raw * static_cast<std::uint64_t>(geometry.dimension() - 1);
}

std::uint64_t count_modes_exact_radius(const CavityGeometry& geometry,
                                       double radius, std::uint64_t budget) {
  check_radius(radius);
  check_budget(geometry, radius, budget);
  const EnumerationSetup s = make_setup(geometry, radius);

  // Slices along the first axis are independent; their integer subcounts
  // are summed, so the result does not depend on scheduling.
  const long long n1_max = axis_max(s.budget - s.suffix_min[1], s.weights[0]);
  std::uint64_t raw = 0;
#pragma omp parallel for reduction(+ : raw) schedule(dynamic, 16)
  for (long long n1 = 1; n1 <= n1_max; ++n1) {
    const double used =
        static_cast<double>(n1) * static_cast<double>(n1) * s.weights[0];
    raw += count_slice(s.weights, s.suffix_min, 1, s.budget - used);
  }
  return raw * static_cast<std::uint64_t>(geometry.dimension() - 1);
}

std::uint64_t count_modes_exact(const CavityGeometry& geometry,
                                double frequency_cutoff,
                                const PhysicalConstants& constants,
                                std::uint64_t budget) {
  return count_modes_exact_radius(
      geometry, radius_from_cutoff(frequency_cutoff, constants), budget);
}

double count_modes_continuum_radius(const CavityGeometry& geometry,
                                    double radius) {
  check_radius(radius);
  const int d = geometry.dimension();
  const double log_volume_term =
      d * (std::log(characteristic_length(geometry)) + std::log(radius) -
           std::log(2.0));
  return (d - 1) * std::exp(std::log(hyper_solid_angle(d)) -
                            std::log(double(d)) + log_volume_term);
}

double count_modes_continuum(const CavityGeometry& geometry,
                             double frequency_cutoff,
                             const PhysicalConstants& constants) {
  return count_modes_continuum_radius(
      geometry, radius_from_cutoff(frequency_cutoff, constants));
}

ModeCountReport mode_count_report(const CavityGeometry& geometry,
                                  double frequency_cutoff,
                                  const PhysicalConstants& constants,
                                  std::uint64_t budget) {
  const double radius = radius_from_cutoff(frequency_cutoff, constants);
  ModeCountReport report;
  report.dimension = geometry.dimension();
  report.frequency_cutoff = frequency_cutoff;
  report.exact_count = count_modes_exact_radius(geometry, radius, budget);
  report.continuum_estimate = count_modes_continuum_radius(geometry, radius);
  report.relative_error =
      std::abs(static_cast<double>(report.exact_count) -
               report.continuum_estimate) /
      report.continuum_estimate;
  return report;
}

}  // namespace hyperbb
