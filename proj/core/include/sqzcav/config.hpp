#pragma once

// Scenario files. A scenario is a small YAML document; every frequency carries
// an explicit unit ("200 g1", "7.5 MHz", "500 kHz"), phases are given in
// "rad" or "pi", times in "inv_g1", "us" or "rabi_periods".

#include "sqzcav/evolve.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sqzcav {

enum class ScenarioKind {
  SpectrumScan,
  UnitaryDynamics,
  EffectiveDynamics,
  MasterDynamics,
  ParameterSweep,
  PhysicalUnits,
};

const char* kind_name(ScenarioKind kind);

enum class EffectiveModel { None, General, Equal, ZeroDelta };
enum class CavityFrame { Squeezed, Lab };
enum class TimeUnit { InvG1, Microseconds, RabiPeriods };

/// How delta_s follows r_p when r_p is swept.
enum class DetuningLaw {
  FixedDeltaS,    ///< delta_s = scale
  FixedDeltaC,    ///< delta_s = scale / cosh(2 r_p)
  CoshRp,         ///< delta_s = scale * cosh(r_p)
  SqrtCosh2Rp,    ///< delta_s = scale * sqrt(cosh(2 r_p))
};

enum class SweepParameter { RP, ReOverRp, ThetaSum, Kappa, Gamma, NTh };
enum class SweepTarget { Trajectory, Resonance, Enhancement };

struct SystemInputs {
  double g1 = 1.0;
  double g2 = 1.0;
  double delta_1 = 0.0;
  std::optional<double> delta_2;  ///< empty: solve the resonance condition
  double theta_p = 0.0;
  // exactly one of (r_p, delta_s) and (delta_c, omega_p) is set
  std::optional<double> r_p, delta_s;
  std::optional<double> delta_c, omega_p;
};

struct ReservoirInputs {
  DissipatorVariant variant = DissipatorVariant::MatchedLindblad;
  ReservoirParams params;
};

struct InitialState {
  BasisLabel atoms = BasisLabel::EG;
  CavityFrame cavity = CavityFrame::Squeezed;
};

struct TimeGrid {
  double t_max = 0.0;
  TimeUnit unit = TimeUnit::InvG1;
  int n_points = 0;
};

struct ScanSpec {
  std::optional<double> center;  ///< empty: centred on the resonance root
  double half_width = 0.5;
  int n_points = 400;
};

struct SweepSpec {
  SweepParameter parameter = SweepParameter::RP;
  std::vector<double> values;
  SweepTarget target = SweepTarget::Trajectory;
  ScenarioKind base = ScenarioKind::MasterDynamics;  ///< for Trajectory targets
  DetuningLaw law = DetuningLaw::FixedDeltaS;
  double law_scale = 0.0;
};

struct Outputs {
  std::string csv;
  std::optional<std::string> plot;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  ScenarioKind kind = ScenarioKind::UnitaryDynamics;
  int n_max = 10;
  double g1_mhz = 0.0;  ///< g1/2pi in MHz when physical units are used
  SystemInputs system;
  std::optional<ReservoirInputs> reservoir;
  InitialState initial_state;
  std::optional<TimeGrid> time_grid;
  std::optional<ScanSpec> scan;
  std::optional<SweepSpec> sweep;
  EffectiveModel effective_model = EffectiveModel::None;
  bool convergence_check = true;
  Outputs outputs;
};

/// Parses and validates a scenario. Errors are ConfigError with the offending
/// key path (e.g. "system.delta_1").
ScenarioConfig parse_config(const std::string& yaml_text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Resolved model parameters. delta_2 is solved when the config asks for the
/// resonance value.
SystemParams resolve_system(const ScenarioConfig& cfg);

}  // namespace sqzcav
