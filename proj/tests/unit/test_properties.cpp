// Seeded randomised checks of structural identities.

#include "sqzcav/evolve.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sqzcav;
using sqzcav::testing::kSeed;
using sqzcav::testing::max_abs;

namespace {

constexpr int kDraws = 20;

struct Draw {
  double r_p, theta_p, n, r_e, theta_e;
};

Draw draw(std::mt19937& rng) {
  std::uniform_real_distribution<double> r(0.0, 2.0), th(-std::numbers::pi, std::numbers::pi),
      n(0.0, 3.0);
  return {r(rng), th(rng), n(rng), r(rng), th(rng)};
}

NoiseCoefficients coeffs(const Draw& d, std::optional<SqueezedDrive> drive) {
  ReservoirParams r;
  r.n_th = d.n;
  r.squeezed_drive = drive;
  return noise_coefficients(r, d.r_p, d.theta_p);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Properties, MatchedDriveLeavesPlainThermalNoise) {
  std::mt19937 rng(kSeed);
  for (int k = 0; k < kDraws; ++k) {
    const Draw d = draw(rng);
    const NoiseCoefficients c = coeffs(d, SqueezedDrive{d.r_p, std::numbers::pi - d.theta_p});
    EXPECT_LT(rel(c.N_s, d.n), 1e-12) << "draw " << k;
    EXPECT_LT(std::abs(c.M_s) / std::max(1.0, c.N_s), 1e-12) << "draw " << k;
  }
}

TEST(Properties, SqueezedReservoirReducesToKnownForms) {
  std::mt19937 rng(kSeed + 1);
  for (int k = 0; k < kDraws; ++k) {
    const Draw d = draw(rng);
    // no drive: squeezed-frame thermal coefficients
    const NoiseCoefficients a = coeffs(d, SqueezedDrive{0.0, d.theta_e});
    EXPECT_LT(rel(a.N_s, (2 * a.N + 1) * d.n + a.N), 1e-12);
    EXPECT_LT(std::abs(a.M_s + a.M * (2 * d.n + 1)) / std::max(1.0, std::abs(a.M_s)), 1e-12);
    // no squeezed frame: lab-frame squeezed reservoir
    const Draw flat{0.0, d.theta_p, d.n, d.r_e, d.theta_e};
    const NoiseCoefficients b = coeffs(flat, SqueezedDrive{d.r_e, d.theta_e});
    EXPECT_LT(rel(b.N_s, b.N_prime), 1e-12);
    EXPECT_LT(std::abs(b.M_s + b.M_prime) / std::max(1.0, std::abs(b.M_s)), 1e-12);
  }
}

TEST(Properties, SymplecticInvariantIsThermal) {
  // (N + 1/2)^2 - |M|^2 = (n + 1/2)^2 for any Gaussian squeezed thermal noise
  std::mt19937 rng(kSeed + 2);
  for (int k = 0; k < kDraws; ++k) {
    const Draw d = draw(rng);
    const NoiseCoefficients c = coeffs(d, SqueezedDrive{d.r_e, d.theta_e});
    const double want = std::pow(d.n + 0.5, 2);
    EXPECT_LT(std::abs(std::pow(c.N_s + 0.5, 2) - std::norm(c.M_s) - want) / std::pow(c.N_s + 1, 2), 1e-12);
    EXPECT_LT(std::abs(std::pow(c.N_prime + 0.5, 2) - std::norm(c.M_prime) - want) /
                  std::pow(c.N_prime + 1, 2),
              1e-12);
  }
}

TEST(Properties, GeneratorPreservesTraceAndHermiticity) {
  std::mt19937 rng(kSeed + 3);
  const HilbertSpace space(3);
  for (int k = 0; k < kDraws; ++k) {
    const Draw d = draw(rng);
    const SystemParams p =
        SystemParams::from_squeezing({1.0, 1.3, 2.0, 2.7, d.theta_p}, d.r_p, 2.5);
    ReservoirParams r;
    r.kappa = 0.4;
    r.gamma = 0.1;
    r.n_th = d.n;
    r.squeezed_drive = SqueezedDrive{d.r_e, d.theta_e};
    const LindbladGenerator gen(hamiltonian_squeezed(p, space),
                                make_dissipator(DissipatorVariant::SqueezedFrameSqueezedReservoir, r, p));
    const Matrix rho = sqzcav::testing::random_density(space.total_dim(), rng);
    const Matrix out = gen.apply(rho);
    const double scale = std::max(1.0, max_abs(out));
    EXPECT_LT(std::abs(out.trace()) / scale, 1e-12);
    EXPECT_LT(max_abs(out - out.adjoint()) / scale, 1e-12);
  }
}

TEST(Properties, HamiltoniansAreHermitianForRandomParameters) {
  std::mt19937 rng(kSeed + 4);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const HilbertSpace space(6);
  for (int k = 0; k < kDraws; ++k) {
    const Draw d = draw(rng);
    const SystemParams p =
        SystemParams::from_squeezing({u(rng), u(rng), u(rng), u(rng), d.theta_p}, d.r_p, 1.0 + std::abs(u(rng)));
    EXPECT_LE(hamiltonian_squeezed(p, space).hermiticity_error(), 1e-12);
    EXPECT_LE(hamiltonian_lab(p, space).hermiticity_error(), 1e-12);
  }
}

TEST(Properties, MasterRunsStayPhysical) {
  std::mt19937 rng(kSeed + 5);
  const HilbertSpace space(3);
  const std::vector<double> times = uniform_times(3.0, 7);
  for (int k = 0; k < 5; ++k) {
    const Draw d = draw(rng);
    const SystemParams p = SystemParams::from_squeezing({1.0, 1.5, 2.0, 2.5, d.theta_p}, 0.5 * d.r_p, 3.0);
    ReservoirParams r;
    r.kappa = 0.2;
    r.gamma = 0.1;
    r.n_th = 0.3 * d.n;
    r.squeezed_drive = SqueezedDrive{0.5 * d.r_e, d.theta_e};
    const Trajectory tr = evolve_master(
        hamiltonian_squeezed(p, space),
        make_dissipator(DissipatorVariant::SqueezedReservoirLab, r, p),
        DensityMatrix(space, sqzcav::testing::random_density(space.total_dim(), rng)), times);
    EXPECT_LT(tr.max_norm_drift(), 1e-9);
    // a truncated squeezed reservoir is not exactly positive; the random
    // full-rank start keeps eigenvalues well away from zero here
    EXPECT_GT(tr.min_positivity(), -1e-6);
  }
}
