#pragma once

#include "sqzcav/evolve.hpp"

#include <vector>

namespace sqzcav {

struct Maximum {
  std::size_t index = 0;  ///< grid index of the sample maximum
  double time = 0.0;      ///< refined by a quadratic fit through three samples
  double value = 0.0;
  double prominence = 0.0;
};

/// Strict local maxima whose topographic prominence is at least
/// max(min_prominence, relative_prominence * value). Fast, small ripples
/// riding on a slow oscillation are ignored this way.
std::vector<Maximum> find_maxima(const std::vector<double>& times, const std::vector<double>& values,
                                 double min_prominence = 1e-3, double relative_prominence = 0.2);

struct PeriodEstimate {
  double period = 0.0;
  double uncertainty = 0.0;  ///< half the grid spacing
  int n_maxima = 0;
};

/// Mean spacing of successive maxima. Throws ConvergenceFailure with fewer
/// than two maxima.
PeriodEstimate extract_period(const std::vector<double>& times, const std::vector<double>& values);
PeriodEstimate extract_period(const Trajectory& traj, BasisLabel label);

/// max - min of the samples with times[i] <= t_end.
double amplitude(const std::vector<double>& times, const std::vector<double>& values,
                 double t_end);

/// Largest sample with times[i] <= t_end.
double peak(const std::vector<double>& times, const std::vector<double>& values, double t_end);

}  // namespace sqzcav
