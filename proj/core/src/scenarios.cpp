#include "sqzcav/scenarios.hpp"

#include "sqzcav/analysis.hpp"
#include "sqzcav/errors.hpp"
#include "sqzcav/version.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

namespace sqzcav {

ScenarioConfig bundled_config(const std::string& id) {
  for (const auto& f : bundled_figures())
    if (f.id == id) return parse_config(f.text);
  throw ConfigError("figure", "unknown figure id '" + id + "' (see list-figures)");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

AtomMatrix effective_matrix(EffectiveModel model, const SystemParams& p, double t) {
  switch (model) {
    case EffectiveModel::Equal: return hamiltonian_eff_equal(p, false);
    case EffectiveModel::ZeroDelta: return hamiltonian_eff_zero_delta(p, false);
    case EffectiveModel::None:
    case EffectiveModel::General: break;
  }
  return hamiltonian_eff_general(p, t, false);
}

BasisLabel partner(BasisLabel l) {
  switch (l) {
    case BasisLabel::EG: return BasisLabel::GE;
    case BasisLabel::GE: return BasisLabel::EG;
    case BasisLabel::EE: return BasisLabel::GG;
    case BasisLabel::GG: return BasisLabel::EE;
  }
  return l;
}

int n_max_of(const ScenarioConfig& cfg, const RunOptions& opts) {
  const int n = opts.n_max.value_or(cfg.n_max);
  if (n < 1) throw ConfigError("n_max", "must be >= 1");
  return n;
}

Ket initial_ket(const ScenarioConfig& cfg, const SystemParams& p, const HilbertSpace& space) {
  if (cfg.initial_state.cavity == CavityFrame::Lab)
    return lab_vacuum_state(space, cfg.initial_state.atoms, p.r_p(), p.theta_p());
  return squeezed_vacuum_state(space, cfg.initial_state.atoms);
}

Trajectory exact_run(const ScenarioConfig& cfg, const SystemParams& p, int n_max,
                     const std::vector<double>& times, const RunOptions& opts) {
  const HilbertSpace space(n_max);
  const Operator h = hamiltonian_squeezed(p, space);
  const Ket psi0 = initial_ket(cfg, p, space);
  if (cfg.kind == ScenarioKind::UnitaryDynamics) return evolve_schrodinger(h, psi0, times);
  const DissipatorSpec spec = make_dissipator(cfg.reservoir->variant, cfg.reservoir->params, p);
  MasterOptions mo;
  mo.method = opts.method;
  return evolve_master(h, spec, DensityMatrix::pure(psi0), times, mo);
}

double max_population_deviation(const Trajectory& a, const Trajectory& b, double t_end) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size() && a.times[i] <= t_end; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      m = std::max(m, std::abs(a.atom_populations[i][k] - b.atom_populations[i][k]));
  return m;
}

bool is_dynamics(ScenarioKind k) {
  return k == ScenarioKind::UnitaryDynamics || k == ScenarioKind::EffectiveDynamics ||
         k == ScenarioKind::MasterDynamics || k == ScenarioKind::PhysicalUnits;
}

}  // namespace

double rabi_coupling(const ScenarioConfig& cfg, const SystemParams& p) {
  const AtomMatrix h = effective_matrix(cfg.effective_model, p, 0.0);
  const BasisLabel from = cfg.initial_state.atoms;
  return std::abs(h(atom_pair_index(from), atom_pair_index(partner(from))));
}

double rabi_period(const ScenarioConfig& cfg, const SystemParams& p) {
  const double g = rabi_coupling(cfg, p);
  if (!(g > 0.0))
    throw ConfigError("time_grid.t_max", "rabi_periods undefined: the initial state has no "
                                         "exchange coupling");
  return std::numbers::pi / g;
}

std::vector<double> output_times(const ScenarioConfig& cfg, const SystemParams& p) {
  if (!cfg.time_grid) throw ConfigError("time_grid", "required for this kind");
  const TimeGrid& g = *cfg.time_grid;
  double t_max = g.t_max;
  switch (g.unit) {
    case TimeUnit::InvG1: break;
    case TimeUnit::Microseconds: t_max *= kTwoPi * cfg.g1_mhz; break;
    case TimeUnit::RabiPeriods: t_max *= rabi_period(cfg, p); break;
  }
  return uniform_times(t_max, g.n_points);
}

DynamicsResult run_dynamics(const ScenarioConfig& cfg, const RunOptions& opts) {
  if (!is_dynamics(cfg.kind))
    throw ConfigError("kind", std::string("run_dynamics cannot run '") + kind_name(cfg.kind) + "'");
  const SystemParams p = resolve_system(cfg);
  DynamicsResult r{p, output_times(cfg, p), std::nullopt, std::nullopt, std::nullopt, 0.0};
  r.rabi_period = rabi_period(cfg, p);
  const int n_max = n_max_of(cfg, opts);

  if (cfg.effective_model != EffectiveModel::None) {
    large_detuning_check(p, true);
    const AtomKet psi0 = atom_basis(cfg.initial_state.atoms);
    if (cfg.effective_model == EffectiveModel::General) {
      TimeDependentAtomMatrix h = [&p](double t) { return hamiltonian_eff_general(p, t, false); };
      r.effective = evolve_effective(h, psi0, r.times);
    } else {
      r.effective = evolve_effective(effective_matrix(cfg.effective_model, p, 0.0), psi0, r.times);
    }
  }
  if (cfg.kind != ScenarioKind::EffectiveDynamics) {
    r.exact = exact_run(cfg, p, n_max, r.times, opts);
    if (cfg.convergence_check && opts.convergence_check) {
      const Trajectory wider = exact_run(cfg, p, n_max + 5, r.times, opts);
      r.truncation_deviation = max_population_deviation(*r.exact, wider, r.times.back());
    }
  }
  return r;
}

CrossingScan run_spectrum(const ScenarioConfig& cfg, const RunOptions& opts) {
  if (cfg.kind != ScenarioKind::SpectrumScan)
    throw ConfigError("kind", "run_spectrum needs kind spectrum_scan");
  const SystemParams p = resolve_system(cfg);
  const ScanSpec scan = cfg.scan.value_or(ScanSpec{});
  const double center = scan.center.value_or(p.delta_2());
  return scan_avoided_crossing(p, crossing_grid(center, scan.half_width, scan.n_points),
                               HilbertSpace(n_max_of(cfg, opts)));
}

namespace {

double law_delta_s(DetuningLaw law, double scale, double r_p) {
  switch (law) {
    case DetuningLaw::FixedDeltaS: return scale;
    case DetuningLaw::FixedDeltaC: return scale / std::cosh(2.0 * r_p);
    case DetuningLaw::CoshRp: return scale * std::cosh(r_p);
    case DetuningLaw::SqrtCosh2Rp: return scale * std::sqrt(std::cosh(2.0 * r_p));
  }
  return scale;
}

SqueezedDrive& drive_of(ScenarioConfig& c) {
  if (!c.reservoir) throw ConfigError("reservoir", "sweep parameter needs a reservoir");
  auto& d = c.reservoir->params.squeezed_drive;
  if (!d) d = SqueezedDrive{};
  return *d;
}

}  // namespace

ScenarioConfig sweep_point(const ScenarioConfig& cfg, double value) {
  if (!cfg.sweep) throw ConfigError("sweep", "config has no sweep");
  const SweepSpec& s = *cfg.sweep;
  ScenarioConfig c = cfg;
  c.kind = s.base;
  c.sweep.reset();
  switch (s.parameter) {
    case SweepParameter::RP:
      if (!c.system.r_p) throw ConfigError("sweep.parameter", "system.r_p sweeps need the (r_p, delta_s) form");
      c.system.r_p = value;
      c.system.delta_s = law_delta_s(s.law, s.law_scale, value);
      break;
    case SweepParameter::ReOverRp: drive_of(c).r_e = value * resolve_system(cfg).r_p(); break;
    case SweepParameter::ThetaSum: drive_of(c).theta_e = value - c.system.theta_p; break;
    case SweepParameter::Kappa: if (c.reservoir) c.reservoir->params.kappa = value; break;
    case SweepParameter::Gamma: if (c.reservoir) c.reservoir->params.gamma = value; break;
    case SweepParameter::NTh: if (c.reservoir) c.reservoir->params.n_th = value; break;
  }
  return c;
}

std::vector<SweepPoint> run_sweep(const ScenarioConfig& cfg, const RunOptions& opts) {
  if (!cfg.sweep || cfg.sweep->target != SweepTarget::Trajectory)
    throw ConfigError("sweep.target", "run_sweep needs a trajectory sweep");
  if (opts.jobs < 1) throw InvalidArgument("jobs must be >= 1");
  const std::vector<double>& values = cfg.sweep->values;
  RunOptions point_opts = opts;
  point_opts.convergence_check = false;  // one n_max+5 rerun per point is out of budget

  std::vector<std::optional<SweepPoint>> slots(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      try {
        slots[i].emplace(SweepPoint{values[i], run_dynamics(sweep_point(cfg, values[i]), point_opts)});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), values.size());
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SweepPoint> out;
  out.reserve(values.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace {

std::string fmt(double v) { return format_double(v); }

void add_common_provenance(ResultTable& t, const ScenarioConfig& cfg, const RunOptions& opts) {
  t.add_provenance("scenario", cfg.name);
  if (!cfg.description.empty()) t.add_provenance("description", cfg.description);
  t.add_provenance("kind", kind_name(cfg.kind));
  t.add_provenance("sqzcav_version", SQZCAV_VERSION);
  t.add_provenance("units", "frequencies in g1, times in 1/g1");
  if (cfg.g1_mhz > 0.0) t.add_provenance("g1_over_2pi_MHz", fmt(cfg.g1_mhz));
  t.add_provenance("n_max", std::to_string(n_max_of(cfg, opts)));
}

void add_system_provenance(ResultTable& t, const SystemParams& p) {
  t.add_provenance("g1", fmt(p.g1()));
  t.add_provenance("g2", fmt(p.g2()));
  t.add_provenance("delta_1", fmt(p.delta_1()));
  t.add_provenance("delta_2", fmt(p.delta_2()));
  t.add_provenance("theta_p", fmt(p.theta_p()));
  t.add_provenance("r_p", fmt(p.r_p()));
  t.add_provenance("delta_s", fmt(p.delta_s()));
  t.add_provenance("delta_c", fmt(p.delta_c()));
  t.add_provenance("omega_p", fmt(p.omega_p_amp()));
  t.add_provenance("alpha", fmt(p.alpha()));
}

void add_reservoir_provenance(ResultTable& t, const ScenarioConfig& cfg, const RunOptions& opts) {
  if (!cfg.reservoir) return;
  const ReservoirParams& r = cfg.reservoir->params;
  t.add_provenance("dissipator", variant_name(cfg.reservoir->variant));
  t.add_provenance("kappa", fmt(r.kappa));
  t.add_provenance("gamma", fmt(r.gamma));
  t.add_provenance("n_th", fmt(r.n_th));
  if (r.squeezed_drive) {
    t.add_provenance("r_e", fmt(r.squeezed_drive->r_e));
    t.add_provenance("theta_e", fmt(r.squeezed_drive->theta_e));
  }
  const MasterOptions mo;
  t.add_provenance("master_method",
                   opts.method == MasterMethod::Exponential ? "exponential" : "adaptive_rk");
  if (opts.method == MasterMethod::AdaptiveRK)
    t.add_provenance("master_tolerances", "rtol=" + fmt(mo.rtol) + " atol=" + fmt(mo.atol));
}

const char* cavity_name(CavityFrame f) {
  return f == CavityFrame::Lab ? "lab_vacuum" : "squeezed_vacuum";
}

const char* model_name(EffectiveModel m) {
  switch (m) {
    case EffectiveModel::None: return "none";
    case EffectiveModel::General: return "general";
    case EffectiveModel::Equal: return "equal";
    case EffectiveModel::ZeroDelta: return "zero_delta";
  }
  return "?";
}

const std::array<BasisLabel, 4> kLabels = {BasisLabel::EG, BasisLabel::GE, BasisLabel::EE,
                                           BasisLabel::GG};

ResultTable dynamics_table(const ScenarioConfig& cfg, const RunOptions& opts) {
  const DynamicsResult r = run_dynamics(cfg, opts);
  const bool physical = cfg.g1_mhz > 0.0;

  std::vector<Column> cols{{"time", "1/g1"}};
  if (physical) cols.push_back({"time_us", "us"});
  if (r.exact) {
    for (BasisLabel l : kLabels) cols.push_back({std::string("P_") + label_name(l), "1"});
    cols.push_back({"photons", "1"});
    cols.push_back({r.exact->density ? "trace" : "norm", "1"});
    if (r.exact->density) cols.push_back({"min_eigenvalue", "1"});
  }
  if (r.effective)
    for (BasisLabel l : kLabels) cols.push_back({std::string("P_") + label_name(l) + "_eff", "1"});

  ResultTable t(cols);
  add_common_provenance(t, cfg, opts);
  add_system_provenance(t, r.params);
  add_reservoir_provenance(t, cfg, opts);
  t.add_provenance("initial_state", std::string(label_name(cfg.initial_state.atoms)) + ", " +
                                        cavity_name(cfg.initial_state.cavity));
  t.add_provenance("effective_model", model_name(cfg.effective_model));
  const SchrodingerOptions so;
  if (r.effective || (r.exact && !r.exact->density))
    t.add_provenance("schrodinger_tolerances", "rtol=" + fmt(so.rtol) + " atol=" + fmt(so.atol));
  t.add_provenance("rabi_coupling", fmt(std::numbers::pi / r.rabi_period));
  t.add_provenance("rabi_period", fmt(r.rabi_period));

  for (std::size_t i = 0; i < r.times.size(); ++i) {
    std::vector<double> row{r.times[i]};
    if (physical) row.push_back(r.times[i] / (kTwoPi * cfg.g1_mhz));
    if (r.exact) {
      for (BasisLabel l : kLabels)
        row.push_back(r.exact->atom_populations[i][static_cast<std::size_t>(atom_pair_index(l))]);
      row.push_back(r.exact->photons[i]);
      row.push_back(r.exact->norm_or_trace[i]);
      if (r.exact->density) row.push_back(r.exact->min_eigenvalue[i]);
    }
    if (r.effective)
      for (BasisLabel l : kLabels)
        row.push_back(
            r.effective->atom_populations[i][static_cast<std::size_t>(atom_pair_index(l))]);
    t.add_row(std::move(row));
  }

  // derived scalars
  const Trajectory& main = r.exact ? *r.exact : *r.effective;
  const BasisLabel target = partner(cfg.initial_state.atoms);
  const std::vector<double> pop = main.population(target);
  t.add_provenance("max_norm_or_trace_drift", fmt(main.max_norm_drift()));
  if (main.density) t.add_provenance("min_positivity", fmt(main.min_positivity()));
  std::optional<PeriodEstimate> period;
  try {
    period = extract_period(main, target);
    t.add_provenance("period", fmt(period->period));
    t.add_provenance("period_uncertainty", fmt(period->uncertainty));
  } catch (const ConvergenceFailure&) {
    t.add_provenance("period", "n/a (fewer than 2 maxima)");
  }
  const double first = period ? period->period : r.rabi_period;
  t.add_provenance(std::string("first_period_peak_P_") + label_name(target),
                   fmt(peak(r.times, pop, first)));
  if (r.exact && r.effective) {
    const double dev = max_population_deviation(*r.exact, *r.effective, 2.0 * r.rabi_period);
    t.add_provenance("max_exact_vs_effective_2_periods", fmt(dev));
  }
  if (cfg.kind == ScenarioKind::PhysicalUnits) {
    if (!physical) throw ConfigError("units.g1", "physical_units needs units.g1");
    if (period) t.add_provenance("period_us", fmt(period->period / (kTwoPi * cfg.g1_mhz)));
    t.add_provenance("first_period_peak", fmt(peak(r.times, pop, first)));
  }
  if (r.truncation_deviation) {
    t.add_provenance("truncation_deviation", fmt(*r.truncation_deviation));
    t.add_provenance("truncation_tolerance", fmt(opts.tolerance));
    t.add_provenance("truncation_ok", *r.truncation_deviation <= opts.tolerance ? "true" : "false");
  }
  return t;
}

ResultTable spectrum_table(const ScenarioConfig& cfg, const RunOptions& opts) {
  const SystemParams p = resolve_system(cfg);
  const CrossingScan s = run_spectrum(cfg, opts);
  ResultTable t({{"delta_2", "g1"}, {"E1", "g1"}, {"E2", "g1"}, {"gap", "g1"}});
  add_common_provenance(t, cfg, opts);
  add_system_provenance(t, p);
  t.add_provenance("min_gap", fmt(s.min_gap));
  t.add_provenance("min_gap_location", fmt(s.min_gap_location));
  t.add_provenance("g_eff", fmt(resonance_coupling(p)));
  for (std::size_t i = 0; i < s.scan_values.size(); ++i) {
    const auto& lv = s.level_pairs[i];
    t.add_row({s.scan_values[i], lv[0], lv[1], std::abs(lv[1] - lv[0])});
  }
  return t;
}

Column sweep_column(SweepParameter p) {
  switch (p) {
    case SweepParameter::RP: return {"r_p", "1"};
    case SweepParameter::ReOverRp: return {"r_e_over_r_p", "1"};
    case SweepParameter::ThetaSum: return {"theta_sum", "rad"};
    case SweepParameter::Kappa: return {"kappa", "g1"};
    case SweepParameter::Gamma: return {"gamma", "g1"};
    case SweepParameter::NTh: return {"n_th", "1"};
  }
  return {"value", "1"};
}

const char* law_name(DetuningLaw l) {
  switch (l) {
    case DetuningLaw::FixedDeltaS: return "fixed_delta_s";
    case DetuningLaw::FixedDeltaC: return "fixed_delta_c";
    case DetuningLaw::CoshRp: return "cosh_rp";
    case DetuningLaw::SqrtCosh2Rp: return "sqrt_cosh_2rp";
  }
  return "?";
}

void add_sweep_provenance(ResultTable& t, const ScenarioConfig& cfg) {
  const SweepSpec& s = *cfg.sweep;
  t.add_provenance("sweep_parameter", sweep_column(s.parameter).name);
  t.add_provenance("sweep_points", std::to_string(s.values.size()));
  if (s.parameter == SweepParameter::RP)
    t.add_provenance("detuning_law", std::string(law_name(s.law)) + " scale=" + fmt(s.law_scale));
}

ResultTable trajectory_sweep_table(const ScenarioConfig& cfg, const RunOptions& opts) {
  const std::vector<SweepPoint> pts = run_sweep(cfg, opts);
  std::vector<Column> cols{sweep_column(cfg.sweep->parameter), {"time", "1/g1"}};
  for (BasisLabel l : kLabels) cols.push_back({std::string("P_") + label_name(l), "1"});
  const bool master = cfg.sweep->base == ScenarioKind::MasterDynamics;
  cols.push_back({"photons", "1"});
  cols.push_back({master ? "trace" : "norm", "1"});
  ResultTable t(cols);
  add_common_provenance(t, cfg, opts);
  add_sweep_provenance(t, cfg);
  t.add_provenance("base_kind", kind_name(cfg.sweep->base));
  add_system_provenance(t, pts.front().result.params);
  add_reservoir_provenance(t, cfg, opts);
  t.add_provenance("initial_state", std::string(label_name(cfg.initial_state.atoms)) + ", " +
                                        cavity_name(cfg.initial_state.cavity));
  t.add_provenance("truncation_check", "not run for sweeps");
  for (const SweepPoint& sp : pts) {
    const Trajectory& tr = *sp.result.exact;
    for (std::size_t i = 0; i < tr.size(); ++i) {
      std::vector<double> row{sp.value, tr.times[i]};
      for (BasisLabel l : kLabels)
        row.push_back(tr.atom_populations[i][static_cast<std::size_t>(atom_pair_index(l))]);
      row.push_back(tr.photons[i]);
      row.push_back(tr.norm_or_trace[i]);
      t.add_row(std::move(row));
    }
  }
  return t;
}

double point_coupling(const ScenarioConfig& pc, const SystemParams& p) {
  const AtomMatrix h = effective_matrix(pc.effective_model, p, 0.0);
  return std::abs(h(atom_index::eg, atom_index::ge));
}

ResultTable scalar_sweep_table(const ScenarioConfig& cfg, const RunOptions& opts) {
  const SweepSpec& s = *cfg.sweep;
  if (s.parameter != SweepParameter::RP)
    throw ConfigError("sweep.parameter", "resonance and enhancement targets sweep system.r_p");
  const bool resonance = s.target == SweepTarget::Resonance;
  std::vector<Column> cols{{"r_p", "1"}, {"delta_s", "g1"}};
  if (resonance) cols.push_back({"delta_2", "g1"});
  cols.insert(cols.end(), {{"g_eff", "g1"}, {"enhancement", "1"}, {"detuning_ratio", "1"}});
  ResultTable t(cols);
  add_common_provenance(t, cfg, opts);
  add_sweep_provenance(t, cfg);
  t.add_provenance("target", resonance ? "resonance" : "enhancement");
  t.add_provenance("effective_model", model_name(cfg.effective_model));
  t.add_provenance("detuning_ratio", "min detuning / max(g cosh r_p, g sinh r_p); >= 10 is valid");

  auto coupling = [&](double r) {
    const ScenarioConfig pc = sweep_point(cfg, r);
    const SystemParams p = resolve_system(pc);
    return std::pair{p, resonance ? resonance_coupling(p) : point_coupling(pc, p)};
  };
  const double g0 = coupling(0.0).second;
  t.add_provenance("g_eff_at_r_p_0", fmt(g0));
  for (double r : s.values) {
    const auto [p, g] = coupling(r);
    std::vector<double> row{r, p.delta_s()};
    if (resonance) row.push_back(p.delta_2());
    row.insert(row.end(), {g, g / g0, large_detuning_check(p, false).ratio});
    t.add_row(std::move(row));
  }
  return t;
}

template <class E>
[[noreturn]] void rethrow_with(const ScenarioConfig& cfg, const E& e) {
  throw E("scenario '" + cfg.name + "': " + e.what());
}

}  // namespace

ResultTable run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
  try {
    switch (cfg.kind) {
      case ScenarioKind::SpectrumScan: return spectrum_table(cfg, opts);
      case ScenarioKind::UnitaryDynamics:
      case ScenarioKind::EffectiveDynamics:
      case ScenarioKind::MasterDynamics:
      case ScenarioKind::PhysicalUnits: return dynamics_table(cfg, opts);
      case ScenarioKind::ParameterSweep:
        return cfg.sweep->target == SweepTarget::Trajectory ? trajectory_sweep_table(cfg, opts)
                                                            : scalar_sweep_table(cfg, opts);
    }
  } catch (const NumericalDiagnostic& e) {
    rethrow_with(cfg, e);
  } catch (const ConvergenceFailure& e) {
    rethrow_with(cfg, e);
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    rethrow_with(cfg, e);
  }
  throw InvalidArgument("unknown scenario kind");
}

std::optional<std::string> truncation_failure(const ResultTable& table) {
  for (const auto& [k, v] : table.provenance)
    if (k == "truncation_ok" && v == "false")
      return "truncation check failed: max population change n_max -> n_max+5 is " +
             table.provenance_value("truncation_deviation") + " > " +
             table.provenance_value("truncation_tolerance");
  return std::nullopt;
}

ResultTable run_physical_units(const RunOptions& opts, bool closed_system) {
  ScenarioConfig cfg = bundled_config("physical_units");
  if (closed_system) {
    cfg.name += "_closed";
    cfg.reservoir->params.kappa = 0.0;
    cfg.reservoir->params.gamma = 0.0;
    cfg.reservoir->params.n_th = 0.0;
  }
  return run_scenario(cfg, opts);
}

PlotSpec default_plot(const ScenarioConfig& cfg) {
  PlotSpec s;
  s.title = cfg.name;
  switch (cfg.kind) {
    case ScenarioKind::SpectrumScan:
      s.x = "delta_2";
      s.y = {"E1", "E2"};
      return s;
    case ScenarioKind::ParameterSweep: {
      const SweepSpec& sw = *cfg.sweep;
      const std::string col = sweep_column(sw.parameter).name;
      if (sw.target != SweepTarget::Trajectory) {
        s.x = "r_p";
        s.y = {"enhancement"};
      } else if (sw.values.size() > 6) {
        s.kind = PlotKind::Heatmap;
        s.x = "time";
        s.y = {col};
        s.z = "P_" + std::string(label_name(partner(cfg.initial_state.atoms)));
      } else {
        s.x = "time";
        s.y = {"P_" + std::string(label_name(partner(cfg.initial_state.atoms)))};
        s.group = col;
      }
      return s;
    }
    default: break;
  }
  s.x = cfg.g1_mhz > 0.0 ? "time_us" : "time";
  const std::string a = std::string("P_") + label_name(cfg.initial_state.atoms);
  const std::string b = std::string("P_") + label_name(partner(cfg.initial_state.atoms));
  if (cfg.kind != ScenarioKind::EffectiveDynamics) s.y = {a, b};
  if (cfg.effective_model != EffectiveModel::None) {
    s.y.push_back(a + "_eff");
    s.y.push_back(b + "_eff");
  }
  return s;
}

}  // namespace sqzcav
