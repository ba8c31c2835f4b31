#pragma once

#include "sqzcav/model.hpp"

#include <array>
#include <vector>

namespace sqzcav {

struct ResonanceSolution {
  double delta_2 = 0.0;
  double g_eff = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Left-minus-right of the Stark-shift balance between |e1 g2> and |g1 e2>,
/// evaluated at the delta_2 stored in p.
double resonance_residual(const SystemParams& p);

/// g1 g2/2 [cosh^2 r (1/dx + 1/dy) - sinh^2 r (1/dz + 1/dw)].
double resonance_coupling(const SystemParams& p);

struct ResonanceOptions {
  double tolerance = 1e-10;
  int max_iterations = 100;
};

/// Solves for delta_2 by damped Newton iteration seeded at delta_2 = delta_1.
/// The delta_2 already in p is ignored.
/// Throws ConvergenceFailure when no root is reached and InvalidArgument when
/// the root makes delta_y or delta_w degenerate.
ResonanceSolution solve_resonance(const SystemParams& p, const ResonanceOptions& opts = {});

enum class CouplingRegime { General, EqualCoupling, ZeroDetuning };

/// Exchange coefficient of the matching effective model (the |e1g2><g1e2|
/// element at t = 0, sign kept). Precondition violations of the selected
/// model are reported as InvalidArgument.
double effective_coupling(const SystemParams& p, CouplingRegime regime);

enum class DetuningPolicy {
  FixedDeltaC,   ///< delta_c held fixed, delta_s = delta_c / cosh(2 r_p)
  ScaledDeltaS,  ///< delta_s = 10 g sqrt(cosh(2 r_p))
};

/// g_eff(r_p) / g_eff(0) for the zero-detuning model under the given policy.
double enhancement_factor(double r_p, DetuningPolicy policy);

struct CrossingScan {
  std::vector<double> scan_values;
  std::vector<std::array<double, 2>> level_pairs;  ///< tracked from |e1g2,0> and |g1e2,0>
  double min_gap = 0.0;
  double min_gap_location = 0.0;
};

/// Uniform grid of n points over [center - half_width, center + half_width].
std::vector<double> crossing_grid(double center, double half_width = 0.5, int n = 400);

/// Diagonalises hamiltonian_squeezed over a delta_2 grid and follows the two
/// levels connected to |e1g2,0> and |g1e2,0> by eigenvector overlap.
/// Throws NumericalDiagnostic when tracking becomes ambiguous (overlap < 0.5)
/// and InvalidArgument when the minimum sits on the grid edge.
CrossingScan scan_avoided_crossing(const SystemParams& p, const std::vector<double>& delta_2_grid,
                                   const HilbertSpace& space);

}  // namespace sqzcav
