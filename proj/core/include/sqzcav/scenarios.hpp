#pragma once

// Scenario runner: resolves a ScenarioConfig, dispatches to the resonance and
// evolution routines and assembles a ResultTable.

#include "sqzcav/config.hpp"
#include "sqzcav/plot.hpp"
#include "sqzcav/resonance.hpp"
#include "sqzcav/result_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqzcav {

struct BundledFigure {
  std::string id;
  std::string text;  ///< YAML source
};

/// Every figure-panel configuration compiled into the library, sorted by id.
const std::vector<BundledFigure>& bundled_figures();
/// Parsed bundled config; ConfigError for an unknown id.
ScenarioConfig bundled_config(const std::string& id);

struct RunOptions {
  std::optional<int> n_max;      ///< overrides the config
  double tolerance = 1e-6;       ///< truncation-convergence tolerance (n_max vs n_max+5)
  int jobs = 1;                  ///< sweep worker threads
  MasterMethod method = MasterMethod::Exponential;
  bool convergence_check = true; ///< global switch; configs may also opt out
};

/// Coupling between the initial atomic state and its exchange partner,
/// read from the effective model at t = 0.
double rabi_coupling(const ScenarioConfig& cfg, const SystemParams& p);
/// Half of a full population-exchange cycle: pi / |rabi_coupling|.
double rabi_period(const ScenarioConfig& cfg, const SystemParams& p);
/// Output times in units of 1/g1.
std::vector<double> output_times(const ScenarioConfig& cfg, const SystemParams& p);

struct DynamicsResult {
  SystemParams params;
  std::vector<double> times;
  std::optional<Trajectory> exact;      ///< Schrodinger or master run
  std::optional<Trajectory> effective;  ///< atoms-only effective model
  /// max |P(n_max) - P(n_max + 5)| over the exact run, when checked
  std::optional<double> truncation_deviation;
  double rabi_period = 0.0;
};

/// unitary_dynamics, effective_dynamics, master_dynamics and physical_units.
DynamicsResult run_dynamics(const ScenarioConfig& cfg, const RunOptions& opts = {});

CrossingScan run_spectrum(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// Config for one sweep point.
ScenarioConfig sweep_point(const ScenarioConfig& cfg, double value);

struct SweepPoint {
  double value = 0.0;
  DynamicsResult result;
};

/// Trajectory sweeps, evaluated on opts.jobs threads. Output order follows
/// the sweep grid regardless of completion order.
std::vector<SweepPoint> run_sweep(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// Runs any scenario kind. The table provenance records the resolved
/// parameters, tolerances and derived scalars (period, gap, deviations).
ResultTable run_scenario(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// Message describing a failed truncation check recorded in the table, if any.
std::optional<std::string> truncation_failure(const ResultTable& table);

/// Bundled physical-units scenario (g1/2pi = 5 MHz). Provenance carries
/// period_us and first_period_peak. closed_system zeroes every rate.
ResultTable run_physical_units(const RunOptions& opts = {}, bool closed_system = false);

/// Default figure for a table produced by run_scenario.
PlotSpec default_plot(const ScenarioConfig& cfg);

}  // namespace sqzcav
