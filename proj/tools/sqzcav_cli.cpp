// sqzcav command-line front end.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical diagnostic abort
// (norm, trace, positivity), 4 convergence failure (root finder, stepper,
// truncation check). Anything else unexpected exits with 1.

#include "sqzcav/errors.hpp"
#include "sqzcav/scenarios.hpp"
#include "sqzcav/version.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace sqzcav;

namespace {

constexpr int kConfigError = 2;
constexpr int kDiagnostic = 3;
constexpr int kConvergence = 4;

struct Flags {
  std::string config;
  std::string out = ".";
  int jobs = 1;
  bool plot = false;
  std::optional<int> nmax;
  double tolerance = 1e-6;
  std::string method = "exponential";
};

void add_run_flags(CLI::App* cmd, Flags& f, bool needs_config) {
  if (needs_config) cmd->add_option("--config", f.config, "scenario YAML file")->required();
  cmd->add_option("--out", f.out, "output directory")->capture_default_str();
  cmd->add_option("--jobs", f.jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--plot", f.plot, "also write an SVG figure");
  cmd->add_option("--nmax", f.nmax, "override the Fock cutoff")->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", f.tolerance,
                  "truncation tolerance for the n_max vs n_max+5 check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--master-method", f.method, "master propagator")
      ->check(CLI::IsMember({"exponential", "rk"}))
      ->capture_default_str();
}

RunOptions run_options(const Flags& f) {
  RunOptions o;
  o.n_max = f.nmax;
  o.tolerance = f.tolerance;
  o.jobs = f.jobs;
  o.method = f.method == "rk" ? MasterMethod::AdaptiveRK : MasterMethod::Exponential;
  return o;
}

void print_summary(const ResultTable& t) {
  static const char* keys[] = {"min_gap", "min_gap_location", "g_eff", "rabi_period", "period",
                               "period_us", "first_period_peak", "max_exact_vs_effective_2_periods",
                               "truncation_deviation"};
  for (const char* k : keys)
    for (const auto& [pk, pv] : t.provenance)
      if (pk == k) std::cout << "  " << pk << " = " << pv << '\n';
}

// Runs one scenario and writes its outputs. Returns the process exit code.
int execute(const ScenarioConfig& cfg, const Flags& f) {
  const ResultTable table = run_scenario(cfg, run_options(f));
  fs::create_directories(f.out);
  const fs::path csv = fs::path(f.out) / cfg.outputs.csv;
  table.save_csv(csv);
  std::cout << cfg.name << ": wrote " << csv.string() << " (" << table.size() << " rows)\n";
  if (f.plot) {
    const fs::path svg = fs::path(f.out) / cfg.outputs.plot.value_or(cfg.name + ".svg");
    emit_plot(table, default_plot(cfg), svg);
    std::cout << cfg.name << ": wrote " << svg.string() << '\n';
  }
  print_summary(table);
  if (auto msg = truncation_failure(table)) {
    std::cerr << cfg.name << ": " << *msg << '\n';
    return kConvergence;
  }
  return 0;
}

ScenarioConfig load_expecting(const std::string& path, std::initializer_list<ScenarioKind> kinds,
                              const std::string& command) {
  ScenarioConfig cfg = load_config(path);
  for (ScenarioKind k : kinds)
    if (cfg.kind == k) return cfg;
  throw ConfigError("kind", std::string("'") + kind_name(cfg.kind) + "' cannot be run by '" +
                                command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-atom exchange through a squeezed cavity mode"};
  app.set_version_flag("--version", SQZCAV_VERSION);
  app.require_subcommand(1);

  Flags f;
  std::string figure_id;
  auto* spectrum = app.add_subcommand("spectrum", "avoided-crossing scan");
  auto* dynamics = app.add_subcommand("dynamics", "closed-system or effective dynamics");
  auto* master = app.add_subcommand("master", "master-equation dynamics");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep");
  auto* physical = app.add_subcommand("physical-units", "bundled scenario in MHz / microseconds");
  auto* reproduce = app.add_subcommand("reproduce", "run a bundled figure panel ('all' for every one)");
  auto* list = app.add_subcommand("list-figures", "list bundled figure panels");
  for (auto* c : {spectrum, dynamics, master, sweep}) add_run_flags(c, f, true);
  add_run_flags(physical, f, false);
  add_run_flags(reproduce, f, false);
  reproduce->add_option("figure-id", figure_id, "figure panel id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kConfigError;
  }

  try {
    if (*list) {
      for (const auto& fig : bundled_figures())
        std::cout << fig.id << "\t" << parse_config(fig.text).description << '\n';
      return 0;
    }
    if (*spectrum)
      return execute(load_expecting(f.config, {ScenarioKind::SpectrumScan}, "spectrum"), f);
    if (*dynamics)
      return execute(load_expecting(f.config,
                                    {ScenarioKind::UnitaryDynamics, ScenarioKind::EffectiveDynamics},
                                    "dynamics"),
                     f);
    if (*master)
      return execute(load_expecting(f.config, {ScenarioKind::MasterDynamics}, "master"), f);
    if (*sweep)
      return execute(load_expecting(f.config, {ScenarioKind::ParameterSweep}, "sweep"), f);
    if (*physical) return execute(bundled_config("physical_units"), f);
    if (*reproduce) {
      if (figure_id != "all") return execute(bundled_config(figure_id), f);
      int worst = 0;
      for (const auto& fig : bundled_figures()) worst = std::max(worst, execute(parse_config(fig.text), f));
      return worst;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalDiagnostic& e) {
    std::cerr << "numerical diagnostic: " << e.what() << '\n';
    return kDiagnostic;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
