#include "frozen_oracles.hpp"
#include "sqzcav/errors.hpp"
#include "sqzcav/resonance.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sqzcav;

namespace {

SystemParams branch(double r, double delta_2 = 199.0) {
  return SystemParams::from_squeezing({1.0, 1.5, 200.0, delta_2, 0.0}, r, 10.0 * std::cosh(r));
}

}  // namespace

TEST(Resonance, RootsMatchOracle) {
  const double rs[] = {0.0, 1.0, 2.0, 3.0};
  for (int k = 0; k < 4; ++k) {
    const ResonanceSolution sol = solve_resonance(branch(rs[k]));
    EXPECT_NEAR(sol.delta_2, oracle::kResonanceDelta2[k], 1e-9) << "r_p = " << rs[k];
    EXPECT_NEAR(sol.g_eff, oracle::kResonanceGEff[k], 1e-9 * oracle::kResonanceGEff[k])
        << "r_p = " << rs[k];
    EXPECT_LT(std::abs(sol.residual), 1e-10);
    EXPECT_LT(std::abs(resonance_residual(branch(rs[k], sol.delta_2))), 1e-10);
  }
}

TEST(Resonance, IgnoresStoredDelta2) {
  const double a = solve_resonance(branch(2.0, 150.0)).delta_2;
  const double b = solve_resonance(branch(2.0, 205.0)).delta_2;
  EXPECT_DOUBLE_EQ(a, b);
}

TEST(Resonance, EqualAtomsResonateAtEqualDetuning) {
  const SystemParams p = SystemParams::from_squeezing({1.0, 1.0, 50.0, 0.0, 0.0}, 1.0, 2.5);
  EXPECT_NEAR(solve_resonance(p).delta_2, 50.0, 1e-9);
}

TEST(Resonance, RejectsDegenerateDetuning) {
  const SystemParams p = SystemParams::from_squeezing({1.0, 1.5, 10.0, 0.0, 0.0}, 0.5, 10.0);
  EXPECT_THROW(solve_resonance(p), InvalidArgument);
}

TEST(Resonance, EffectiveCouplingPerRegime) {
  const SystemParams p = branch(2.0, oracle::kResonanceDelta2[2]);
  EXPECT_NEAR(effective_coupling(p, CouplingRegime::General), resonance_coupling(p), 1e-15);
  EXPECT_THROW(effective_coupling(p, CouplingRegime::EqualCoupling), InvalidArgument);
  EXPECT_THROW(effective_coupling(p, CouplingRegime::ZeroDetuning), InvalidArgument);
  const SystemParams z = SystemParams::from_squeezing({1.0, 1.0, 0.0, 0.0, 0.0}, 2.0, 40.0);
  EXPECT_NEAR(effective_coupling(z, CouplingRegime::ZeroDetuning), std::cosh(4.0) / 40.0, 1e-14);
}

TEST(Enhancement, ClosedForms) {
  EXPECT_DOUBLE_EQ(enhancement_factor(0.0, DetuningPolicy::FixedDeltaC), 1.0);
  EXPECT_DOUBLE_EQ(enhancement_factor(0.0, DetuningPolicy::ScaledDeltaS), 1.0);
  for (double r : {0.5, 1.5, 3.0}) {
    EXPECT_NEAR(enhancement_factor(r, DetuningPolicy::FixedDeltaC), std::pow(std::cosh(2 * r), 2),
                1e-9 * std::pow(std::cosh(2 * r), 2));
    EXPECT_NEAR(enhancement_factor(r, DetuningPolicy::ScaledDeltaS), std::sqrt(std::cosh(2 * r)),
                1e-12 * std::cosh(2 * r));
  }
  EXPECT_GT(enhancement_factor(3.0, DetuningPolicy::FixedDeltaC), 100.0);
  EXPECT_THROW(enhancement_factor(-0.1, DetuningPolicy::FixedDeltaC), InvalidArgument);
}

TEST(Crossing, GridShape) {
  const auto g = crossing_grid(10.0, 0.5, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 9.5);
  EXPECT_DOUBLE_EQ(g[2], 10.0);
  EXPECT_DOUBLE_EQ(g.back(), 10.5);
  EXPECT_THROW(crossing_grid(1.0, 0.5, 2), InvalidArgument);
  EXPECT_THROW(crossing_grid(1.0, 0.0, 10), InvalidArgument);
}

TEST(Crossing, MinimumGapMatchesOracle) {
  const SystemParams p = branch(2.0);
  const HilbertSpace space(10);
  const CrossingScan scan =
      scan_avoided_crossing(p, crossing_grid(oracle::kResonanceDelta2[2], 0.5, 400), space);
  ASSERT_EQ(scan.level_pairs.size(), 400u);
  // parabolic refinement on a 2.5e-3 grid
  EXPECT_NEAR(scan.min_gap, oracle::kCrossingMinGap, 2e-5);
  EXPECT_NEAR(scan.min_gap_location, oracle::kCrossingLocation, 5e-4);
  // the splitting is twice the second-order exchange coupling
  EXPECT_NEAR(scan.min_gap / (2.0 * oracle::kResonanceGEff[2]), 1.0, 0.01);
}

TEST(Crossing, EdgeMinimumIsRejected) {
  const SystemParams p = branch(2.0);
  const HilbertSpace space(6);
  EXPECT_THROW(scan_avoided_crossing(p, crossing_grid(oracle::kCrossingLocation + 0.4, 0.3, 50), space),
               InvalidArgument);
  EXPECT_THROW(scan_avoided_crossing(p, {199.0, 199.5}, space), InvalidArgument);
}
