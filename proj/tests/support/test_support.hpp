#pragma once

#include "sqzcav/fock_algebra.hpp"
#include "sqzcav/model.hpp"

#include <random>

namespace sqzcav::testing {

inline constexpr unsigned kSeed = 20240611u;

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Random density matrix of full rank: G G^dag / tr.
inline Matrix random_density(int d, std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

/// Parameters used by the small master-equation oracle runs.
inline SystemParams small_system() {
  return SystemParams::from_squeezing({1.0, 1.5, 2.0, 2.5, 0.3}, 0.5, 3.0);
}

}  // namespace sqzcav::testing
