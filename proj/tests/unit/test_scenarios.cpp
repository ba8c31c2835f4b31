#include "frozen_oracles.hpp"
#include "sqzcav/errors.hpp"
#include "sqzcav/scenarios.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <set>

using namespace sqzcav;
namespace fs = std::filesystem;

namespace {

struct Caption {
  const char* id;
  ScenarioKind kind;
  int n_max;
  double g2, delta_1, r_p, delta_s;
  double delta_2;  // NaN: solved on the resonance branch
};

constexpr double kSolve = std::numeric_limits<double>::quiet_NaN();
constexpr auto U = ScenarioKind::UnitaryDynamics;
constexpr auto M = ScenarioKind::MasterDynamics;
constexpr auto S = ScenarioKind::ParameterSweep;

// r_p, detunings and couplings quoted with each panel
const Caption kCaptions[] = {
    {"fig2a", ScenarioKind::SpectrumScan, 10, 1.5, 200, 2, 10 * std::cosh(2.0), kSolve},
    {"fig2b", U, 10, 1.5, 200, 1, 10 * std::cosh(1.0), kSolve},
    {"fig2c", U, 10, 1.5, 200, 2, 10 * std::cosh(2.0), kSolve},
    {"fig2d", U, 10, 1.5, 200, 3, 10 * std::cosh(3.0), kSolve},
    {"fig2e", S, 10, 1.5, 200, 0, 10, kSolve},
    {"fig3a", U, 10, 1, 50, 1, 2.5, 50},
    {"fig3b", U, 10, 1, 293.1853206148963, 1, 324.0469333112012, 293.1853206148963},
    {"fig3c", U, 30, 1, 50, 2, 2.5, 50},
    {"fig3d", U, 10, 1, 714.81718130589, 2, 790.0610951275627, 714.81718130589},
    {"fig4a", U, 10, 1, 0, 1, 398.7033432511195, 0},
    {"fig4b", U, 10, 1, 0, 1, 398.7033432511195, 0},
    {"fig4c", U, 10, 1, 0, 2, 54.9284902105298, 0},
    {"fig4d", U, 10, 1, 0, 2, 54.9284902105298, 0},
    {"fig5a", S, 10, 1, 0, 0, 1500, 0},
    {"fig5b", S, 10, 1, 0, 0, 10, 0},
    {"fig6a", M, 10, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
    {"fig6b", M, 15, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
    {"fig6c", S, 10, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
    {"fig6d", S, 10, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
    {"fig6e", S, 10, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
    {"fig6f", S, 10, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
    {"fig7a", M, 10, 1.5, 200, 3, 10 * std::cosh(3.0), kSolve},
    {"fig7b", M, 10, 1.5, 200, 3, 10 * std::cosh(3.0), kSolve},
    {"fig7c", M, 10, 1.5, 200, 3, 10 * std::cosh(3.0), kSolve},
    {"fig7d", M, 10, 1.5, 200, 3, 10 * std::cosh(3.0), kSolve},
    {"physical_units", ScenarioKind::PhysicalUnits, 10, 1.5, 200, 2, 10 * std::cosh(2.0), 199.822},
};

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "sqzcav_scenario_tests";
  fs::create_directories(dir);
  return dir;
}

RunOptions quick(int n_max) {
  RunOptions o;
  o.n_max = n_max;
  o.convergence_check = false;
  return o;
}

}  // namespace

TEST(Bundled, EveryPanelIsPresentAndParses) {
  std::set<std::string> ids;
  for (const auto& f : bundled_figures()) ids.insert(f.id);
  EXPECT_EQ(ids.size(), std::size(kCaptions));
  for (const Caption& c : kCaptions) EXPECT_TRUE(ids.count(c.id)) << c.id;
  EXPECT_THROW(bundled_config("fig99"), ConfigError);
}

TEST(Bundled, CaptionParameters) {
  for (const Caption& c : kCaptions) {
    SCOPED_TRACE(c.id);
    const ScenarioConfig cfg = bundled_config(c.id);
    EXPECT_EQ(cfg.name, c.id);
    EXPECT_EQ(cfg.kind, c.kind);
    EXPECT_EQ(cfg.n_max, c.n_max);
    const SystemParams p = resolve_system(cfg);
    EXPECT_NEAR(p.g1(), 1.0, 1e-12);
    EXPECT_NEAR(p.g2(), c.g2, 1e-12);
    EXPECT_NEAR(p.delta_1(), c.delta_1, 1e-9);
    EXPECT_NEAR(p.r_p(), c.r_p, 1e-12);
    EXPECT_NEAR(p.delta_s(), c.delta_s, 1e-9);
    if (std::isnan(c.delta_2)) {
      EXPECT_FALSE(cfg.system.delta_2);
      EXPECT_NEAR(resonance_residual(p), 0.0, 1e-9);
    } else {
      EXPECT_NEAR(p.delta_2(), c.delta_2, 1e-9);
    }
  }
}

TEST(Bundled, ReservoirsFollowPanels) {
  const ScenarioConfig a = bundled_config("fig6a");
  EXPECT_EQ(a.reservoir->variant, DissipatorVariant::SqueezedFrameThermal);
  EXPECT_DOUBLE_EQ(a.reservoir->params.n_th, 5.0);
  const ScenarioConfig b = bundled_config("fig6b");
  EXPECT_EQ(b.reservoir->variant, DissipatorVariant::MatchedLindblad);
  const ScenarioConfig f = bundled_config("fig6f");
  ASSERT_EQ(f.sweep->values.size(), 4u);
  EXPECT_DOUBLE_EQ(f.sweep->values[0], -3 * std::numbers::pi);
  const double gammas[] = {0.1, 0.5, 0.1, 0.5}, ns[] = {0, 0, 0.1, 0.1};
  const char* ids[] = {"fig7a", "fig7b", "fig7c", "fig7d"};
  for (int k = 0; k < 4; ++k) {
    const ScenarioConfig c = bundled_config(ids[k]);
    EXPECT_DOUBLE_EQ(c.reservoir->params.kappa, 1.0);
    EXPECT_DOUBLE_EQ(c.reservoir->params.gamma, gammas[k]);
    EXPECT_DOUBLE_EQ(c.reservoir->params.n_th, ns[k]);
  }
  const ScenarioConfig phys = bundled_config("physical_units");
  EXPECT_DOUBLE_EQ(phys.g1_mhz, 5.0);
  EXPECT_NEAR(phys.reservoir->params.kappa, 0.1, 1e-15);
  EXPECT_NEAR(phys.reservoir->params.gamma, 0.001, 1e-15);
}

TEST(Runner, RabiPeriodFromEffectiveCoupling) {
  const ScenarioConfig c = bundled_config("fig2c");
  const SystemParams p = resolve_system(c);
  EXPECT_NEAR(rabi_coupling(c, p), oracle::kResonanceGEff[2], 1e-9);
  EXPECT_NEAR(rabi_period(c, p), std::numbers::pi / oracle::kResonanceGEff[2], 1e-5);
  const auto t = output_times(c, p);
  EXPECT_EQ(t.size(), static_cast<std::size_t>(c.time_grid->n_points));
  EXPECT_NEAR(t.back(), c.time_grid->t_max * rabi_period(c, p), 1e-9);
}

TEST(Runner, DynamicsTableLayoutAndProvenance) {
  const ResultTable t = run_scenario(bundled_config("fig4a"), quick(4));
  for (const char* col : {"time", "P_eg", "P_ge", "P_ee", "P_gg", "photons", "norm", "P_ge_eff"})
    EXPECT_TRUE(t.has_column(col)) << col;
  EXPECT_EQ(t.columns().front().unit, "1/g1");
  EXPECT_EQ(t.provenance_value("scenario"), "fig4a");
  EXPECT_EQ(t.provenance_value("n_max"), "4");
  EXPECT_NO_THROW(t.provenance_value("rabi_period"));
  EXPECT_NO_THROW(t.provenance_value("max_exact_vs_effective_2_periods"));
  EXPECT_FALSE(truncation_failure(t));
}

TEST(Runner, TruncationCheckRecordsFailure) {
  ScenarioConfig c = bundled_config("fig3c");
  RunOptions o;
  o.n_max = 4;
  const ResultTable t = run_scenario(c, o);
  EXPECT_EQ(t.provenance_value("truncation_ok"), "false");
  EXPECT_TRUE(truncation_failure(t));
}

TEST(Runner, OutputIsDeterministic) {
  const ScenarioConfig c = bundled_config("fig7b");
  const std::string a = run_scenario(c, quick(4)).to_csv();
  const std::string b = run_scenario(c, quick(4)).to_csv();
  EXPECT_EQ(a, b);
}

TEST(Runner, SweepOrderIndependentOfThreads) {
  const ScenarioConfig c = bundled_config("fig6e");
  RunOptions one = quick(3), three = quick(3);
  three.jobs = 3;
  const ResultTable a = run_scenario(c, one);
  const ResultTable b = run_scenario(c, three);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.column("r_e_over_r_p").front(), 1.0);
  EXPECT_EQ(a.size(), 3u * 400u);
}

TEST(Runner, ScalarSweepTable) {
  const ResultTable t = run_scenario(bundled_config("fig5a"));
  ASSERT_EQ(t.size(), 61u);
  const auto e = t.column("enhancement");
  EXPECT_DOUBLE_EQ(e.front(), 1.0);
  EXPECT_GT(e.back(), 100.0);
  const auto r = t.column("r_p");
  const auto ds = t.column("delta_s");
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_NEAR(ds[i], 1500.0 / std::cosh(2 * r[i]), 1e-9);

  const ResultTable res = run_scenario(bundled_config("fig2e"));
  const auto d2 = res.column("delta_2");
  EXPECT_NEAR(d2[40], oracle::kResonanceDelta2[2], 1e-8);  // r_p = 2
  EXPECT_NEAR(d2[60], oracle::kResonanceDelta2[3], 1e-8);  // r_p = 3
}

TEST(Runner, SpectrumTable) {
  ScenarioConfig c = bundled_config("fig2a");
  c.scan->n_points = 101;
  const ResultTable t = run_scenario(c);
  EXPECT_EQ(t.size(), 101u);
  EXPECT_NEAR(std::stod(t.provenance_value("min_gap")), oracle::kCrossingMinGap, 5e-4);
}

TEST(Runner, PlotsAreWritten) {
  const fs::path dir = scratch();
  for (const char* id : {"fig4a", "fig5b"}) {
    const ScenarioConfig c = bundled_config(id);
    const ResultTable t = run_scenario(c, quick(3));
    const fs::path svg = dir / (std::string(id) + ".svg");
    emit_plot(t, default_plot(c), svg);
    ASSERT_TRUE(fs::exists(svg));
    EXPECT_GT(fs::file_size(svg), 500u);
  }
}

TEST(Runner, PhysicalUnitsClosedSystem) {
  RunOptions o;
  o.convergence_check = false;
  const ResultTable t = run_physical_units(o, true);
  EXPECT_NEAR(std::stod(t.provenance_value("first_period_peak")), 1.0, 0.02);
  const double period = std::stod(t.provenance_value("period"));
  const double g = std::stod(t.provenance_value("rabi_coupling"));
  EXPECT_NEAR(period * g / std::numbers::pi, 1.0, 0.05);
  EXPECT_TRUE(t.has_column("time_us"));
}

TEST(Runner, MismatchedKindsAndDrivesAreRejected) {
  ScenarioConfig c = bundled_config("fig6b");
  c.reservoir->params.squeezed_drive->r_e = 1.5;
  EXPECT_THROW(run_scenario(c, quick(3)), InvalidArgument);
}
