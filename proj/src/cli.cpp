#include "hyperbb/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperbb/cavity.hpp"
#include "hyperbb/constants.hpp"
#include "hyperbb/numerics.hpp"
#include "hyperbb/radiometry.hpp"
#include "hyperbb/spectrum.hpp"
#include "hyperbb/wien.hpp"

namespace hyperbb::cli {

namespace {

using nlohmann::json;

// Shortest decimal form that round-trips to the same double; keeps CSV and
// plain payloads byte-stable without precision loss.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

enum class Format { plain, csv, json };

struct GlobalOptions {
  Format format = Format::plain;
  bool natural_units = false;
  double tolerance = 1e-12;

  PhysicalConstants constants() const {
    return natural_units ? hyperbb::natural_units() : default_constants();
  }
  RealTolerance solver_tolerance() const { return {tolerance, 0.0, 200}; }
};

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  int dimension = 3;
  double temperature = 0.0;
  double nu_min = 0.0, nu_max = 0.0;
  unsigned points = 0;
};

std::string run_spectrum(const SpectrumArgs& a, const GlobalOptions& g) {
  const PhysicalConstants pc = g.constants();
  std::vector<double> nus(a.points);
  const double log_min = std::log(a.nu_min), log_max = std::log(a.nu_max);
  for (unsigned j = 0; j < a.points; ++j) {
    if (j == 0)
      nus[j] = a.nu_min;
    else if (j + 1 == a.points)
      nus[j] = a.nu_max;
    else
      nus[j] = std::exp(log_min + (log_max - log_min) * j / (a.points - 1));
  }

  std::ostringstream body;
  json rows = json::array();
  if (g.format == Format::csv) body << "nu_hz,z,rho_si\n";
  if (g.format == Format::plain) body << "# nu_hz z rho_si\n";
  for (double nu : nus) {
    const SpectralDensityValue rho =
        spectral_energy_density({a.dimension, a.temperature, nu}, pc);
    switch (g.format) {
      case Format::csv:
        body << fmt(nu) << ',' << fmt(rho.dimensionless_z) << ','
             << fmt(rho.value) << '\n';
        break;
      case Format::plain:
        body << fmt(nu) << ' ' << fmt(rho.dimensionless_z) << ' '
             << fmt(rho.value) << '\n';
        break;
      case Format::json:
        rows.push_back({{"nu_hz", nu},
                        {"z", rho.dimensionless_z},
                        {"rho_si", rho.value}});
        break;
    }
  }
  if (g.format == Format::json) {
    const json doc = {{"dimension", a.dimension},
                      {"temperature_k", a.temperature},
                      {"rows", rows}};
    body << doc.dump() << '\n';
  }
  return body.str();
}

// ---------------------------------------------------------------------------
// wien

struct WienArgs {
  int dimension = 3;
  std::optional<double> temperature;
};

std::string run_wien(const WienArgs& a, const GlobalOptions& g) {
  const PhysicalConstants pc = g.constants();
  const WienSolution sol =
      a.temperature
          ? peak_frequency(a.dimension, *a.temperature, pc,
                           g.solver_tolerance())
          : solve_wien(a.dimension, g.solver_tolerance());

  std::ostringstream body;
  switch (g.format) {
    case Format::plain:
      body << "z " << fmt(sol.z_peak) << '\n';
      if (sol.peak_frequency)
        body << "nu_max_hz " << fmt(*sol.peak_frequency) << '\n';
      break;
    case Format::csv:
      if (sol.peak_frequency)
        body << "dimension,z_peak,temperature_k,nu_max_hz\n"
             << sol.dimension << ',' << fmt(sol.z_peak) << ','
             << fmt(*sol.temperature) << ',' << fmt(*sol.peak_frequency)
             << '\n';
      else
        body << "dimension,z_peak\n"
             << sol.dimension << ',' << fmt(sol.z_peak) << '\n';
      break;
    case Format::json: {
      json doc = {{"dimension", sol.dimension}, {"z_peak", sol.z_peak}};
      if (sol.peak_frequency) {
        doc["temperature_k"] = *sol.temperature;
        doc["nu_max_hz"] = *sol.peak_frequency;
      }
      body << doc.dump() << '\n';
      break;
    }
  }
  return body.str();
}

// ---------------------------------------------------------------------------
// sb

std::string run_sb(int dimension, const GlobalOptions& g) {
  const RadiationConstants rc =
      radiation_constants(dimension, g.constants());
  std::ostringstream body;
  switch (g.format) {
    case Format::plain:
      body << "a_si " << fmt(rc.a_D) << '\n'
           << "sigma_si " << fmt(rc.sigma_D) << '\n'
           << "f " << fmt(rc.geometric_factor_f_D) << '\n'
           << "log_a " << fmt(rc.log_a_D) << '\n'
           << "log_sigma " << fmt(rc.log_sigma_D) << '\n';
      break;
    case Format::csv:
      body << "dimension,a_si,sigma_si,log_a,log_sigma,f\n"
           << rc.dimension << ',' << fmt(rc.a_D) << ',' << fmt(rc.sigma_D)
           << ',' << fmt(rc.log_a_D) << ',' << fmt(rc.log_sigma_D) << ','
           << fmt(rc.geometric_factor_f_D) << '\n';
      break;
    case Format::json: {
      const json doc = {{"dimension", rc.dimension},
                        {"a_si", rc.a_D},
                        {"sigma_si", rc.sigma_D},
                        {"log_a", rc.log_a_D},
                        {"log_sigma", rc.log_sigma_D},
                        {"f", rc.geometric_factor_f_D}};
      body << doc.dump() << '\n';
      break;
    }
  }
  return body.str();
}

// ---------------------------------------------------------------------------
// modes

struct ModesArgs {
  int dimension = 0;
  std::vector<double> edges;
  std::string compact;  // comma list, '-' marks a non-compact dimension
  std::optional<double> cutoff;
  std::optional<double> radius;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

std::vector<std::optional<double>> parse_compact(const std::string& text,
                                                 std::size_t dimension) {
  std::vector<std::optional<double>> sizes;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ','))
    sizes.push_back(token == "-" ? std::optional<double>{}
                                 : std::optional<double>{std::stod(token)});
  if (sizes.size() != dimension)
    throw std::domain_error("--compact must list one entry per dimension");
  return sizes;
}

std::string run_modes(const ModesArgs& a, const GlobalOptions& g) {
  const PhysicalConstants pc = g.constants();
  const CavityGeometry geometry(
      a.edges,
      a.compact.empty() ? std::vector<std::optional<double>>{}
                        : parse_compact(a.compact, a.edges.size()));

  const CompactFitResult fit = validate_compact_fit(geometry);
  if (!fit.ok()) {
    std::string msg = "cavity does not fit its compact dimensions at index";
    for (int idx : fit.violations) msg += ' ' + std::to_string(idx);
    throw std::domain_error(msg);
  }

  const double radius = a.radius ? *a.radius : 2.0 * *a.cutoff / pc.light_speed_c;
  const double cutoff_hz =
      a.cutoff ? *a.cutoff : *a.radius * pc.light_speed_c / 2.0;

  ModeCountReport report;
  report.dimension = geometry.dimension();
  report.frequency_cutoff = cutoff_hz;
  report.exact_count = count_modes_exact_radius(geometry, radius, a.budget);
  report.continuum_estimate = count_modes_continuum_radius(geometry, radius);
  report.relative_error =
      std::abs(static_cast<double>(report.exact_count) -
               report.continuum_estimate) /
      report.continuum_estimate;

  std::ostringstream body;
  switch (g.format) {
    case Format::plain:
      body << "dimension " << report.dimension << '\n'
           << "cutoff_hz " << fmt(report.frequency_cutoff) << '\n'
           << "radius " << fmt(radius) << '\n'
           << "exact_count " << report.exact_count << '\n'
           << "continuum_estimate " << fmt(report.continuum_estimate) << '\n'
           << "relative_error " << fmt(report.relative_error) << '\n';
      break;
    case Format::csv:
      body << "dimension,cutoff_hz,radius,exact_count,continuum_estimate,"
              "relative_error\n"
           << report.dimension << ',' << fmt(report.frequency_cutoff) << ','
           << fmt(radius) << ',' << report.exact_count << ','
           << fmt(report.continuum_estimate) << ','
           << fmt(report.relative_error) << '\n';
      break;
    case Format::json: {
      const json doc = {{"dimension", report.dimension},
                        {"cutoff_hz", report.frequency_cutoff},
                        {"radius", radius},
                        {"exact_count", report.exact_count},
                        {"continuum_estimate", report.continuum_estimate},
                        {"relative_error", report.relative_error}};
      body << doc.dump() << '\n';
      break;
    }
  }
  return body.str();
}

// ---------------------------------------------------------------------------
// check

struct CheckRow {
  std::string name;
  bool pass = false;
  double discrepancy = 0.0;
};

double bisect_wien_reference(int d) {
  const auto f = [d](double z) { return std::exp(z) * (d - z) - d; };
  double lo = 1e-9 * d, hi = d - 1e-9 * d;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) > 0.0) == (f(mid) > 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<CheckRow> run_embedded_checks(double perturb_sigma3) {
  // The suite always validates SI-unit results, independent of
  // --natural-units: it certifies the build, not a particular run.
  const PhysicalConstants pc = default_constants();
  std::vector<CheckRow> rows;
  const auto add = [&rows](const std::string& name, double discrepancy,
                           double tolerance) {
    rows.push_back({name, discrepancy <= tolerance, discrepancy});
  };

  for (int d : {2, 3, 4}) {
    const double z = solve_wien(d).z_peak;
    add("wien_root_d" + std::to_string(d),
        std::abs(z - bisect_wien_reference(d)), 1e-9);
  }

  const RadiationConstants rc3 = radiation_constants(3, pc);
  const double k = pc.boltzmann_k, c = pc.light_speed_c, h = pc.planck_h;
  const double pi = 3.14159265358979323846;
  const double sigma3_textbook =
      2.0 * std::pow(pi, 5) * std::pow(k, 4) / (15.0 * c * c * std::pow(h, 3));
  const double sigma3 = rc3.sigma_D * (1.0 + perturb_sigma3);
  add("sigma3_si_pin", std::abs(sigma3 / sigma3_textbook - 1.0), 1e-12);
  add("a3_equals_4sigma3_over_c", std::abs(rc3.a_D * c / (4.0 * sigma3) - 1.0),
      1e-12);

  for (int d = 2; d <= 10; ++d)
    add("quadrature_vs_closed_form_d" + std::to_string(d),
        verify_density_by_quadrature(d, 300.0, pc), 1e-9);

  double worst_f = 0.0;
  for (int d = 2; d <= 30; ++d) {
    const RadiationConstants rc = radiation_constants(d, pc);
    worst_f = std::max(
        worst_f, std::abs(rc.sigma_D /
                              (rc.geometric_factor_f_D * c * rc.a_D) -
                          1.0));
  }
  add("radiance_factor_identity_d2_30", worst_f, 1e-12);
  add("f2_pin", std::abs(radiation_constants(2, pc).geometric_factor_f_D -
                         1.0 / pi),
      1e-14);
  add("f3_pin", std::abs(rc3.geometric_factor_f_D - 0.25), 1e-14);

  // 3D reduction: rho equals the textbook Planck law 8 pi h nu^3 / c^3 /
  // (e^z - 1) at seeded random (nu, T) pairs.
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> z_exp(std::log(0.01), std::log(300.0));
  std::uniform_real_distribution<double> t_exp(std::log(100.0),
                                               std::log(10000.0));
  double worst_planck = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double z = std::exp(z_exp(rng));
    const double temperature = std::exp(t_exp(rng));
    const double nu = z * k * temperature / h;
    const double textbook =
        8.0 * pi * h * nu * nu * nu / (c * c * c * std::expm1(h * nu / (k * temperature)));
    const double rho =
        spectral_energy_density({3, temperature, nu}, pc).value;
    worst_planck = std::max(worst_planck, std::abs(rho / textbook - 1.0));
  }
  add("planck_3d_reduction_20pts", worst_planck, 1e-14);

  const CavityGeometry square({1.0, 1.0});
  const CavityGeometry cube({1.0, 1.0, 1.0});
  add("mode_count_unit_square_r5",
      std::abs(static_cast<double>(count_modes_exact_radius(square, 5.0)) -
               15.0),
      0.0);
  add("mode_count_unit_cube_r2",
      std::abs(static_cast<double>(count_modes_exact_radius(cube, 2.0)) - 2.0),
      0.0);
  return rows;
}

std::string format_checks(const std::vector<CheckRow>& rows,
                          const GlobalOptions& g) {
  std::ostringstream body;
  switch (g.format) {
    case Format::plain:
      for (const CheckRow& row : rows)
        body << row.name << ' ' << (row.pass ? "pass" : "fail") << ' '
             << fmt(row.discrepancy) << '\n';
      break;
    case Format::csv:
      body << "name,pass,discrepancy\n";
      for (const CheckRow& row : rows)
        body << row.name << ',' << (row.pass ? "true" : "false") << ','
             << fmt(row.discrepancy) << '\n';
      break;
    case Format::json: {
      json checks = json::array();
      for (const CheckRow& row : rows)
        checks.push_back({{"name", row.name},
                          {"pass", row.pass},
                          {"discrepancy", row.discrepancy}});
      body << json{{"checks", checks}}.dump() << '\n';
      break;
    }
  }
  return body.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"blackbody radiation observables in D spatial dimensions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  std::string format_name = "plain";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_flag("--natural-units", global.natural_units,
               "use h = k = c = 1 instead of SI values");
  app.add_option("--tolerance", global.tolerance,
                 "relative tolerance for root solves")
      ->check(CLI::Range(1e-15, 0.5));

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "tabulate the spectral energy density");
  spectrum_cmd->add_option("-D,--dimension", spectrum_args.dimension)
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("-T,--temperature", spectrum_args.temperature)
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--nu-min", spectrum_args.nu_min)
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--nu-max", spectrum_args.nu_max)
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--points", spectrum_args.points)
      ->required()
      ->check(CLI::Range(2u, 100000000u));

  WienArgs wien_args;
  double wien_temperature = 0.0;
  auto* wien_cmd =
      app.add_subcommand("wien", "displacement-law peak of the spectrum");
  wien_cmd->add_option("-D,--dimension", wien_args.dimension)->required();
  auto* wien_t_opt =
      wien_cmd->add_option("-T,--temperature", wien_temperature)
          ->check(CLI::PositiveNumber);

  int sb_dimension = 3;
  auto* sb_cmd = app.add_subcommand(
      "sb", "generalized radiation constants a_D and sigma_D");
  sb_cmd->add_option("-D,--dimension", sb_dimension)->required();

  ModesArgs modes_args;
  auto* modes_cmd = app.add_subcommand(
      "modes", "exact vs continuum standing-wave mode counts");
  modes_cmd->add_option("-D,--dimension", modes_args.dimension)->required();
  modes_cmd->add_option("--edges", modes_args.edges, "cavity edge lengths")
      ->required()
      ->delimiter(',');
  modes_cmd->add_option("--compact", modes_args.compact,
                        "compact sizes; '-' = non-compact (e.g. -,-,1)");
  double modes_cutoff = 0.0, modes_radius = 0.0;
  auto* cut_group = modes_cmd->add_option_group("cutoff");
  auto* cutoff_opt =
      cut_group->add_option("--cutoff", modes_cutoff, "frequency cutoff in Hz")
          ->check(CLI::PositiveNumber);
  auto* radius_opt =
      cut_group
          ->add_option("--radius", modes_radius, "dimensionless 2 nu / c")
          ->check(CLI::PositiveNumber);
  cut_group->require_option(1);
  modes_cmd->add_option("--budget", modes_args.budget,
                        "enumeration budget in lattice sites");

  double perturb_sigma3 = 0.0;
  auto* check_cmd = app.add_subcommand(
      "check", "run the embedded oracle suite; exit 0 iff all checks pass");
  check_cmd->add_option("--perturb-sigma3", perturb_sigma3)
      ->group("");  // test hook, hidden from help

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  global.format = format_name == "csv"
                      ? Format::csv
                      : (format_name == "json" ? Format::json : Format::plain);

  try {
    std::string payload;
    if (spectrum_cmd->parsed()) {
      if (!(spectrum_args.nu_min < spectrum_args.nu_max)) {
        err << "--nu-min must be below --nu-max\n";
        return 2;
      }
      payload = run_spectrum(spectrum_args, global);
    } else if (wien_cmd->parsed()) {
      if (wien_t_opt->count() > 0) wien_args.temperature = wien_temperature;
      payload = run_wien(wien_args, global);
    } else if (sb_cmd->parsed()) {
      payload = run_sb(sb_dimension, global);
    } else if (modes_cmd->parsed()) {
      if (static_cast<int>(modes_args.edges.size()) != modes_args.dimension) {
        err << "--edges must list exactly D lengths\n";
        return 2;
      }
      if (cutoff_opt->count() > 0) modes_args.cutoff = modes_cutoff;
      if (radius_opt->count() > 0) modes_args.radius = modes_radius;
      payload = run_modes(modes_args, global);
    } else if (check_cmd->parsed()) {
      const std::vector<CheckRow> rows = run_embedded_checks(perturb_sigma3);
      payload = format_checks(rows, global);
      out << payload;
      for (const CheckRow& row : rows)
        if (!row.pass) return 1;
      return 0;
    }
    out << payload;
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

CommandResult run_command(const std::vector<std::string>& args,
                          std::string* diagnostics) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  if (diagnostics) *diagnostics += err.str();
  return {code, out.str()};
}

}  // namespace hyperbb::cli
