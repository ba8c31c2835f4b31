#include "sqzcav/config.hpp"

#include "sqzcav/errors.hpp"
#include "sqzcav/resonance.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace sqzcav {

const char* kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::SpectrumScan: return "spectrum_scan";
    case ScenarioKind::UnitaryDynamics: return "unitary_dynamics";
    case ScenarioKind::EffectiveDynamics: return "effective_dynamics";
    case ScenarioKind::MasterDynamics: return "master_dynamics";
    case ScenarioKind::ParameterSweep: return "parameter_sweep";
    case ScenarioKind::PhysicalUnits: return "physical_units";
  }
  return "?";
}

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void allow_keys(const YAML::Node& node, const std::string& path, std::set<std::string> keys) {
  if (!node.IsMap()) throw ConfigError(path.empty() ? "<root>" : path, "expected a mapping");
  for (const auto& kv : node) {
    const std::string k = kv.first.as<std::string>();
    if (!keys.count(k)) throw ConfigError(join(path, k), "unknown key");
  }
}

std::string scalar(const YAML::Node& node, const std::string& path) {
  if (!node || !node.IsScalar()) throw ConfigError(path, "expected a scalar value");
  return node.Scalar();
}

double parse_number(const std::string& text, const std::string& path) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = text.data() + text.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e || !std::isfinite(v))
    throw ConfigError(path, "'" + text + "' is not a finite number");
  return v;
}

struct Quantity {
  double value = 0.0;
  std::string unit;
};

Quantity quantity(const YAML::Node& node, const std::string& path) {
  std::istringstream is(scalar(node, path));
  std::string num, unit, extra;
  is >> num >> unit >> extra;
  if (num.empty()) throw ConfigError(path, "empty value");
  if (!extra.empty()) throw ConfigError(path, "expected '<number> <unit>'");
  return {parse_number(num, path), unit};
}

struct Reader {
  double g1_mhz = 0.0;

  double dimensionless(const YAML::Node& node, const std::string& path) const {
    const Quantity q = quantity(node, path);
    if (!q.unit.empty()) throw ConfigError(path, "dimensionless value takes no unit");
    return q.value;
  }

  double frequency(const YAML::Node& node, const std::string& path) const {
    const Quantity q = quantity(node, path);
    if (q.unit == "g1") return q.value;
    if (q.unit.empty()) throw ConfigError(path, "frequency needs a unit (g1, MHz or kHz)");
    double mhz = 0.0;
    if (q.unit == "MHz") mhz = q.value;
    else if (q.unit == "kHz") mhz = q.value * 1e-3;
    else throw ConfigError(path, "unknown frequency unit '" + q.unit + "'");
    if (g1_mhz <= 0.0) throw ConfigError(path, "physical units need units.g1 to be set");
    return mhz / g1_mhz;
  }

  double phase(const YAML::Node& node, const std::string& path) const {
    const Quantity q = quantity(node, path);
    if (q.unit == "rad") return q.value;
    if (q.unit == "pi") return q.value * std::numbers::pi;
    throw ConfigError(path, "phase needs a unit (rad or pi)");
  }

  int count(const YAML::Node& node, const std::string& path, int min) const {
    const double v = dimensionless(node, path);
    if (v != std::floor(v) || v < min || v > 1e8)
      throw ConfigError(path, "expected an integer >= " + std::to_string(min));
    return static_cast<int>(v);
  }
};

BasisLabel parse_label(const std::string& s, const std::string& path) {
  if (s == "eg") return BasisLabel::EG;
  if (s == "ge") return BasisLabel::GE;
  if (s == "ee") return BasisLabel::EE;
  if (s == "gg") return BasisLabel::GG;
  throw ConfigError(path, "unknown atom state '" + s + "' (eg, ge, ee, gg)");
}

ScenarioKind parse_kind(const std::string& s, const std::string& path) {
  for (ScenarioKind k : {ScenarioKind::SpectrumScan, ScenarioKind::UnitaryDynamics,
                         ScenarioKind::EffectiveDynamics, ScenarioKind::MasterDynamics,
                         ScenarioKind::ParameterSweep, ScenarioKind::PhysicalUnits})
    if (s == kind_name(k)) return k;
  throw ConfigError(path, "unknown kind '" + s + "'");
}

DissipatorVariant parse_variant(const std::string& s, const std::string& path) {
  for (DissipatorVariant v :
       {DissipatorVariant::ThermalLab, DissipatorVariant::SqueezedFrameThermal,
        DissipatorVariant::SqueezedReservoirLab, DissipatorVariant::SqueezedFrameSqueezedReservoir,
        DissipatorVariant::MatchedLindblad})
    if (s == variant_name(v)) return v;
  throw ConfigError(path, "unknown dissipator variant '" + s + "'");
}

void parse_system(const YAML::Node& n, const Reader& rd, SystemInputs& s) {
  const std::string p = "system";
  allow_keys(n, p, {"g1", "g2", "delta_1", "delta_2", "theta_p", "r_p", "delta_s", "delta_c",
                    "omega_p"});
  if (n["g1"]) s.g1 = rd.frequency(n["g1"], p + ".g1");
  if (n["g2"]) s.g2 = rd.frequency(n["g2"], p + ".g2");
  if (!n["delta_1"]) throw ConfigError(p + ".delta_1", "required");
  s.delta_1 = rd.frequency(n["delta_1"], p + ".delta_1");
  if (!n["delta_2"]) throw ConfigError(p + ".delta_2", "required (a frequency or 'resonance')");
  if (scalar(n["delta_2"], p + ".delta_2") != "resonance")
    s.delta_2 = rd.frequency(n["delta_2"], p + ".delta_2");
  if (n["theta_p"]) s.theta_p = rd.phase(n["theta_p"], p + ".theta_p");

  const bool squeeze_form = n["r_p"] || n["delta_s"];
  const bool pump_form = n["delta_c"] || n["omega_p"];
  if (squeeze_form == pump_form)
    throw ConfigError(p, "give exactly one of (r_p, delta_s) or (delta_c, omega_p)");
  if (squeeze_form) {
    if (!n["r_p"] || !n["delta_s"]) throw ConfigError(p, "r_p and delta_s must both be given");
    s.r_p = rd.dimensionless(n["r_p"], p + ".r_p");
    s.delta_s = rd.frequency(n["delta_s"], p + ".delta_s");
  } else {
    if (!n["delta_c"] || !n["omega_p"])
      throw ConfigError(p, "delta_c and omega_p must both be given");
    s.delta_c = rd.frequency(n["delta_c"], p + ".delta_c");
    s.omega_p = rd.frequency(n["omega_p"], p + ".omega_p");
  }
}

ReservoirInputs parse_reservoir(const YAML::Node& n, const Reader& rd) {
  const std::string p = "reservoir";
  allow_keys(n, p, {"variant", "kappa", "gamma", "n_th", "r_e", "theta_e"});
  ReservoirInputs r;
  r.variant = parse_variant(scalar(n["variant"], p + ".variant"), p + ".variant");
  if (n["kappa"]) r.params.kappa = rd.frequency(n["kappa"], p + ".kappa");
  if (n["gamma"]) r.params.gamma = rd.frequency(n["gamma"], p + ".gamma");
  if (n["n_th"]) r.params.n_th = rd.dimensionless(n["n_th"], p + ".n_th");
  if (n["r_e"] || n["theta_e"]) {
    SqueezedDrive d;
    if (n["r_e"]) d.r_e = rd.dimensionless(n["r_e"], p + ".r_e");
    if (n["theta_e"]) d.theta_e = rd.phase(n["theta_e"], p + ".theta_e");
    r.params.squeezed_drive = d;
  }
  if (r.params.kappa < 0) throw ConfigError(p + ".kappa", "must be >= 0");
  if (r.params.gamma < 0) throw ConfigError(p + ".gamma", "must be >= 0");
  if (r.params.n_th < 0) throw ConfigError(p + ".n_th", "must be >= 0");
  return r;
}

TimeGrid parse_time_grid(const YAML::Node& n, const Reader& rd) {
  const std::string p = "time_grid";
  allow_keys(n, p, {"t_max", "n_points"});
  TimeGrid g;
  const Quantity q = quantity(n["t_max"], p + ".t_max");
  if (q.unit == "inv_g1") g.unit = TimeUnit::InvG1;
  else if (q.unit == "us") g.unit = TimeUnit::Microseconds;
  else if (q.unit == "rabi_periods") g.unit = TimeUnit::RabiPeriods;
  else throw ConfigError(p + ".t_max", "time needs a unit (inv_g1, us or rabi_periods)");
  g.t_max = q.value;
  if (!(g.t_max > 0.0)) throw ConfigError(p + ".t_max", "must be positive");
  if (g.unit == TimeUnit::Microseconds && rd.g1_mhz <= 0.0)
    throw ConfigError(p + ".t_max", "microseconds need units.g1 to be set");
  if (!n["n_points"]) throw ConfigError(p + ".n_points", "required");
  g.n_points = rd.count(n["n_points"], p + ".n_points", 2);
  return g;
}

ScanSpec parse_scan(const YAML::Node& n, const Reader& rd) {
  const std::string p = "scan";
  allow_keys(n, p, {"center", "half_width", "n_points"});
  ScanSpec s;
  if (n["center"] && scalar(n["center"], p + ".center") != "resonance")
    s.center = rd.frequency(n["center"], p + ".center");
  if (n["half_width"]) s.half_width = rd.frequency(n["half_width"], p + ".half_width");
  if (!(s.half_width > 0.0)) throw ConfigError(p + ".half_width", "must be positive");
  if (n["n_points"]) s.n_points = rd.count(n["n_points"], p + ".n_points", 3);
  return s;
}

SweepSpec parse_sweep(const YAML::Node& n, const Reader& rd) {
  const std::string p = "sweep";
  allow_keys(n, p, {"parameter", "values", "target", "base", "detuning_law"});
  SweepSpec s;
  const std::string par = scalar(n["parameter"], p + ".parameter");
  bool is_phase = false, is_freq = false;
  if (par == "system.r_p") s.parameter = SweepParameter::RP;
  else if (par == "reservoir.r_e_over_r_p") s.parameter = SweepParameter::ReOverRp;
  else if (par == "reservoir.theta_sum") { s.parameter = SweepParameter::ThetaSum; is_phase = true; }
  else if (par == "reservoir.kappa") { s.parameter = SweepParameter::Kappa; is_freq = true; }
  else if (par == "reservoir.gamma") { s.parameter = SweepParameter::Gamma; is_freq = true; }
  else if (par == "reservoir.n_th") s.parameter = SweepParameter::NTh;
  else throw ConfigError(p + ".parameter", "unsupported sweep parameter '" + par + "'");

  auto value = [&](const YAML::Node& v, const std::string& path) {
    if (is_phase) return rd.phase(v, path);
    if (is_freq) return rd.frequency(v, path);
    return rd.dimensionless(v, path);
  };
  const YAML::Node vals = n["values"];
  const std::string vp = p + ".values";
  if (!vals) throw ConfigError(vp, "required");
  if (vals.IsSequence()) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      s.values.push_back(value(vals[i], vp + "[" + std::to_string(i) + "]"));
  } else {
    allow_keys(vals, vp, {"from", "to", "n"});
    const double a = value(vals["from"], vp + ".from");
    const double b = value(vals["to"], vp + ".to");
    const int cnt = rd.count(vals["n"], vp + ".n", 2);
    for (int i = 0; i < cnt; ++i) s.values.push_back(a + (b - a) * i / (cnt - 1));
  }
  if (s.values.empty()) throw ConfigError(vp, "sweep grid is empty");

  if (n["target"]) {
    const std::string t = scalar(n["target"], p + ".target");
    if (t == "trajectory") s.target = SweepTarget::Trajectory;
    else if (t == "resonance") s.target = SweepTarget::Resonance;
    else if (t == "enhancement") s.target = SweepTarget::Enhancement;
    else throw ConfigError(p + ".target", "unknown target '" + t + "'");
  }
  if (n["base"]) {
    s.base = parse_kind(scalar(n["base"], p + ".base"), p + ".base");
    if (s.base != ScenarioKind::UnitaryDynamics && s.base != ScenarioKind::MasterDynamics)
      throw ConfigError(p + ".base", "must be unitary_dynamics or master_dynamics");
  }
  if (n["detuning_law"]) {
    const YAML::Node l = n["detuning_law"];
    const std::string lp = p + ".detuning_law";
    allow_keys(l, lp, {"law", "scale"});
    const std::string law = scalar(l["law"], lp + ".law");
    if (law == "fixed_delta_s") s.law = DetuningLaw::FixedDeltaS;
    else if (law == "fixed_delta_c") s.law = DetuningLaw::FixedDeltaC;
    else if (law == "cosh_rp") s.law = DetuningLaw::CoshRp;
    else if (law == "sqrt_cosh_2rp") s.law = DetuningLaw::SqrtCosh2Rp;
    else throw ConfigError(lp + ".law", "unknown law '" + law + "'");
    s.law_scale = rd.frequency(l["scale"], lp + ".scale");
  } else if (s.parameter == SweepParameter::RP) {
    throw ConfigError(p + ".detuning_law", "required when sweeping system.r_p");
  }
  return s;
}

}  // namespace

ScenarioConfig parse_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("", std::string("YAML syntax error: ") + e.what());
  }
  allow_keys(root, "", {"name", "description", "kind", "n_max", "units", "system", "reservoir",
                        "initial_state", "time_grid", "scan", "sweep", "effective_model",
                        "convergence_check", "outputs"});
  ScenarioConfig c;
  Reader rd;
  c.name = scalar(root["name"], "name");
  if (c.name.empty()) throw ConfigError("name", "must not be empty");
  if (root["description"]) c.description = scalar(root["description"], "description");
  c.kind = parse_kind(scalar(root["kind"], "kind"), "kind");
  if (root["units"]) {
    allow_keys(root["units"], "units", {"g1"});
    const Quantity q = quantity(root["units"]["g1"], "units.g1");
    if (q.unit != "MHz") throw ConfigError("units.g1", "expected a value in MHz");
    if (!(q.value > 0.0)) throw ConfigError("units.g1", "must be positive");
    rd.g1_mhz = c.g1_mhz = q.value;
  }
  if (root["n_max"]) c.n_max = rd.count(root["n_max"], "n_max", 1);

  if (!root["system"]) throw ConfigError("system", "required");
  parse_system(root["system"], rd, c.system);
  if (root["reservoir"]) c.reservoir = parse_reservoir(root["reservoir"], rd);

  if (root["initial_state"]) {
    const YAML::Node n = root["initial_state"];
    allow_keys(n, "initial_state", {"atoms", "cavity"});
    if (n["atoms"])
      c.initial_state.atoms = parse_label(scalar(n["atoms"], "initial_state.atoms"),
                                          "initial_state.atoms");
    if (n["cavity"]) {
      const std::string cav = scalar(n["cavity"], "initial_state.cavity");
      if (cav == "squeezed_vacuum") c.initial_state.cavity = CavityFrame::Squeezed;
      else if (cav == "lab_vacuum") c.initial_state.cavity = CavityFrame::Lab;
      else throw ConfigError("initial_state.cavity", "expected squeezed_vacuum or lab_vacuum");
    }
  }
  if (root["time_grid"]) c.time_grid = parse_time_grid(root["time_grid"], rd);
  if (root["scan"]) c.scan = parse_scan(root["scan"], rd);
  if (root["sweep"]) c.sweep = parse_sweep(root["sweep"], rd);
  if (root["effective_model"]) {
    const std::string m = scalar(root["effective_model"], "effective_model");
    if (m == "none") c.effective_model = EffectiveModel::None;
    else if (m == "general") c.effective_model = EffectiveModel::General;
    else if (m == "equal") c.effective_model = EffectiveModel::Equal;
    else if (m == "zero_delta") c.effective_model = EffectiveModel::ZeroDelta;
    else throw ConfigError("effective_model", "unknown model '" + m + "'");
  }
  if (root["convergence_check"]) {
    const std::string v = scalar(root["convergence_check"], "convergence_check");
    if (v == "true") c.convergence_check = true;
    else if (v == "false") c.convergence_check = false;
    else throw ConfigError("convergence_check", "expected true or false");
  }
  if (!root["outputs"]) throw ConfigError("outputs", "required");
  {
    const YAML::Node n = root["outputs"];
    allow_keys(n, "outputs", {"csv", "plot"});
    c.outputs.csv = scalar(n["csv"], "outputs.csv");
    if (c.outputs.csv.empty()) throw ConfigError("outputs.csv", "must not be empty");
    if (n["plot"]) c.outputs.plot = scalar(n["plot"], "outputs.plot");
  }

  // cross-field rules
  const bool sweep_kind = c.kind == ScenarioKind::ParameterSweep;
  if (sweep_kind != c.sweep.has_value())
    throw ConfigError("sweep", sweep_kind ? "required for parameter_sweep"
                                          : "only allowed for parameter_sweep");
  const bool needs_time =
      c.kind == ScenarioKind::UnitaryDynamics || c.kind == ScenarioKind::EffectiveDynamics ||
      c.kind == ScenarioKind::MasterDynamics || c.kind == ScenarioKind::PhysicalUnits ||
      (sweep_kind && c.sweep->target == SweepTarget::Trajectory);
  if (needs_time && !c.time_grid) throw ConfigError("time_grid", "required for this kind");
  const bool needs_reservoir =
      c.kind == ScenarioKind::MasterDynamics || c.kind == ScenarioKind::PhysicalUnits ||
      (sweep_kind && c.sweep->target == SweepTarget::Trajectory &&
       c.sweep->base == ScenarioKind::MasterDynamics);
  if (needs_reservoir && !c.reservoir) throw ConfigError("reservoir", "required for this kind");
  if (c.kind == ScenarioKind::EffectiveDynamics && c.effective_model == EffectiveModel::None)
    throw ConfigError("effective_model", "required for effective_dynamics");
  if (c.kind == ScenarioKind::SpectrumScan && !c.scan) c.scan = ScanSpec{};
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

SystemParams resolve_system(const ScenarioConfig& cfg) {
  const SystemInputs& s = cfg.system;
  AtomCouplings atoms{s.g1, s.g2, s.delta_1, s.delta_2.value_or(s.delta_1), s.theta_p};
  try {
    SystemParams p = s.r_p ? SystemParams::from_squeezing(atoms, *s.r_p, *s.delta_s)
                           : SystemParams::from_pump(atoms, *s.delta_c, *s.omega_p);
    if (!s.delta_2) p = p.with_delta_2(solve_resonance(p).delta_2);
    return p;
  } catch (const InvalidArgument& e) {
    throw ConfigError("system", e.what());
  }
}

}  // namespace sqzcav
