#pragma once
// Run configuration, error metrics and study drivers.

#include "wbfv/cases.hpp"
#include "wbfv/solver.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace wbfv {

/// How errors are measured.
struct ReferenceSpec {
  /// "initial": against the initial cell averages (equilibrium tests).
  /// "fine": against a block-averaged fine-grid run.
  /// "none": no error evaluation.
  std::string kind = "initial";
  SchemeConfig scheme;
  int n = 0;
};

struct RunConfig {
  std::string scenario = "isothermal-linear";
  ScenarioParams params;
  SchemeConfig scheme;
  std::vector<int> resolutions{128};
  double cfl = 0.5;
  std::optional<double> t_end;
  /// "exact" (quadrature of the initial data) or "discrete" (discrete equilibrium, 1D only).
  std::string init = "exact";
  int anchor_cell = 0;
  /// Overrides both 1D boundary kinds when set.
  std::optional<BoundaryKind> boundary;
  ReferenceSpec reference;
  /// Directory for cached fine-grid references; empty disables caching.
  std::string cache_dir;
  std::string out_dir;
  std::uint64_t seed = 1;
  int repetitions = 1;
  long max_steps = 50000000;

  /// Parses JSON text; unknown keys and malformed values throw ConfigError.
  static RunConfig parse(const std::string& json_text);
  static RunConfig load(const std::string& path);
  std::string dump() const;
  bool is_2d() const { return is_scenario_2d(scenario); }
};

// ---- metrics -------------------------------------------------------------

/// dx * sum |q - ref| over interior cells, per component.
Eigen::VectorXd l1_error(const CellField1& q, const CellField1& ref, const Grid1D& grid);
Eigen::VectorXd l1_error(const CellField2& q, const CellField2& ref, const Grid2D& grid);

/// log2(e_coarse / e_fine).
double convergence_rate(double e_coarse, double e_fine);

/// Sum of |a_i - a_{i-1}| over interior cells of one component.
double total_variation(const CellField1& q, const Grid1D& grid, int comp);
double tv_indicator(double tv, double tv_ref);

/// Integer-ratio block average of a fine field onto the coarse grid.
/// Coarse ghosts are left zero.
CellField1 restrict_block_average(const CellField1& fine, const Grid1D& fine_grid, const Grid1D& coarse_grid);
CellField2 restrict_block_average(const CellField2& fine, const Grid2D& fine_grid, const Grid2D& coarse_grid);

double max_velocity(const CellField1& q, const Grid1D& grid);

// ---- single runs ---------------------------------------------------------

struct Run1D {
  Grid1D grid;
  CellField1 initial;
  CellField1 q;
  AdvanceResult advance;
  SolverStats stats;
};

struct Run2D {
  Grid2D grid;
  CellField2 initial;
  CellField2 q;
  AdvanceResult advance;
  SolverStats stats;
};

Scenario1D resolve_scenario_1d(const RunConfig& cfg);
Scenario2D resolve_scenario_2d(const RunConfig& cfg);

/// Runs the configured scenario at resolution n with the given scheme.
/// `observer` is forwarded to the time loop.
Run1D run_1d(const RunConfig& cfg, const SchemeConfig& scheme, int n,
             std::function<bool(double, long, const CellField1&)> observer = {});
Run2D run_2d(const RunConfig& cfg, const SchemeConfig& scheme, int n);

/// Fine-grid reference for cfg.reference restricted to n cells per direction,
/// read from or written to cfg.cache_dir when set.
CellField1 fine_reference_1d(const RunConfig& cfg, int n);
CellField2 fine_reference_2d(const RunConfig& cfg, int n);

// ---- studies -------------------------------------------------------------

struct RunRow {
  int n = 0;
  std::vector<double> error;
  /// Rate against the previous row; NaN for the first row.
  std::vector<double> rate;
  /// Oscillation indicator per component (1D fine references only).
  std::vector<double> theta;
  double seconds = 0.0;
  long steps = 0;
  long fallbacks = 0;
  std::string failure;
  bool ok() const { return failure.empty(); }
};

struct RunReport {
  std::string scenario;
  std::string scheme;
  int order = 0;
  std::vector<std::string> components;
  std::vector<RunRow> rows;

  const RunRow* row(int n) const;
};

RunReport run_convergence_study(const RunConfig& cfg);

struct EfficiencyRow {
  int n = 0;
  double mean_seconds = 0.0;
  double var_seconds = 0.0;
  double error = 0.0;
  std::string failure;
};

/// Timings of cfg.repetitions repeated runs per resolution together with the
/// energy error of the last repetition.
std::vector<EfficiencyRow> run_efficiency_study(const RunConfig& cfg);

// ---- output --------------------------------------------------------------

/// Columns: component,N,error,rate.
void write_report_csv(const RunReport& report, const std::string& path);
/// Plain-text table laid out one row per resolution.
std::string format_report(const RunReport& report);
void write_efficiency_csv(const std::vector<EfficiencyRow>& rows, const std::string& path);
/// Columns: x,rho,rhou,E (1D) or x,y,rho,rhou,rhov,E (2D).
void write_fields_csv(const Run1D& run, const std::string& path);
void write_fields_csv(const Run2D& run, const std::string& path);
void write_meta_json(const RunConfig& cfg, const std::string& path);

// ---- property checks -----------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Randomised self-checks of the building blocks (fluxes, reconstruction,
/// EoS, anchors, quadrature, time integrators).
std::vector<CheckResult> run_property_checks(std::uint64_t seed);

}  // namespace wbfv
