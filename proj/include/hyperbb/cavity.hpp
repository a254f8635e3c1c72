#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperbb/constants.hpp"
#include "hyperbb/errors.hpp"

namespace hyperbb {

// A D-dimensional rectangular cavity (D >= 2).  Each dimension may
// optionally be compact with size L_i, in which case the cavity edge must
// fit inside it (see validate_compact_fit).
class CavityGeometry {
 public:
  explicit CavityGeometry(std::vector<double> edges,
                          std::vector<std::optional<double>> compact_sizes = {});

  int dimension() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<double>& edges() const noexcept { return edges_; }
  const std::vector<std::optional<double>>& compact_sizes() const noexcept {
    return compact_sizes_;
  }

 private:
  std::vector<double> edges_;
  std::vector<std::optional<double>> compact_sizes_;  // empty: all non-compact
};

// Standing-wave quantum numbers, one per dimension, each >= 1.
struct ModeIndex {
  std::vector<int> n;
};

struct ModeCountReport {
  int dimension = 0;
  double frequency_cutoff = 0.0;       // Hz
  std::uint64_t exact_count = 0;       // includes the (D-1) polarization factor
  double continuum_estimate = 0.0;     // includes the (D-1) factor
  double relative_error = 0.0;         // |exact - estimate| / estimate
};

struct CompactFitResult {
  std::vector<int> violations;  // 1-based indices of dimensions where l_i > L_i
  bool ok() const noexcept { return violations.empty(); }
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000;

// Frequency of the standing-wave mode n: nu = (c/2) sqrt(sum (n_i/l_i)^2).
double mode_frequency(const CavityGeometry& geometry, const ModeIndex& mode,
                      const PhysicalConstants& constants);

// Total solid angle in D dimensions, 2 pi^{D/2} / Gamma(D/2).
double hyper_solid_angle(int dimension);

// Geometric mean of the edges, (prod l_i)^{1/D}, computed in log domain.
double characteristic_length(const CavityGeometry& geometry);

// Checks l_i <= L_i for every compact dimension; never throws.
CompactFitResult validate_compact_fit(const CavityGeometry& geometry);

// Exact number of standing-wave modes with frequency <= cutoff, i.e.
// (D-1) * #{ n in Z^D, n_i >= 1 : sum (n_i/l_i)^2 <= (2 nu / c)^2 }.
// Boundary ties count as inside.  Throws enumeration_budget_error when the
// continuum prediction exceeds `budget` lattice sites.  The _radius
// variants take the dimensionless cutoff r = 2 nu / c directly.
std::uint64_t count_modes_exact(const CavityGeometry& geometry,
                                double frequency_cutoff,
                                const PhysicalConstants& constants,
                                std::uint64_t budget = kDefaultEnumerationBudget);
std::uint64_t count_modes_exact_radius(const CavityGeometry& geometry,
                                       double radius,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// Serial reference implementation of the same count; kept for testing and
// benchmarking against the parallel kernel.
std::uint64_t count_modes_exact_radius_serial(
    const CavityGeometry& geometry, double radius,
    std::uint64_t budget = kDefaultEnumerationBudget);

// Continuum (Weyl) estimate of the same count:
// (D-1) * (Omega_D / D) * (l_c nu / c)^D with l_c the geometric edge mean.
double count_modes_continuum(const CavityGeometry& geometry,
                             double frequency_cutoff,
                             const PhysicalConstants& constants);
double count_modes_continuum_radius(const CavityGeometry& geometry,
                                    double radius);

ModeCountReport mode_count_report(const CavityGeometry& geometry,
                                  double frequency_cutoff,
                                  const PhysicalConstants& constants,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace hyperbb
