#include "sqzcav/analysis.hpp"

#include "sqzcav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sqzcav {

namespace {

void check_series(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size()) throw InvalidArgument("times and values differ in length");
}

// Prominence as in scipy.signal.peak_prominences: drop from the peak to the
// higher of the two minima on the way to a taller sample (or the edge).
double prominence(const std::vector<double>& v, std::size_t i) {
  const double top = v[i];
  double left_min = top;
  for (std::size_t j = i; j-- > 0;) {
    if (v[j] > top) break;
    left_min = std::min(left_min, v[j]);
  }
  double right_min = top;
  for (std::size_t j = i + 1; j < v.size(); ++j) {
    if (v[j] > top) break;
    right_min = std::min(right_min, v[j]);
  }
  return top - std::max(left_min, right_min);
}

}  // namespace

std::vector<Maximum> find_maxima(const std::vector<double>& times, const std::vector<double>& values,
                                 double min_prominence, double relative_prominence) {
  check_series(times, values);
  std::vector<Maximum> out;
  const std::size_t n = values.size();
  if (n < 3) return out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    // strict on the left, plateau-tolerant on the right
    if (!(values[i] > values[i - 1] && values[i] >= values[i + 1])) continue;
    const double prom = prominence(values, i);
    if (prom < std::max(min_prominence, relative_prominence * values[i])) continue;

    Maximum m;
    m.index = i;
    m.prominence = prom;
    const double h0 = times[i - 1] - times[i], h2 = times[i + 1] - times[i];
    const double s0 = (values[i - 1] - values[i]) / h0, s2 = (values[i + 1] - values[i]) / h2;
    const double a = (s2 - s0) / (h2 - h0);
    const double b = s0 - a * h0;
    if (a < 0.0) {
      const double u = std::clamp(-b / (2.0 * a), h0, h2);
      m.time = times[i] + u;
      m.value = values[i] + b * u + a * u * u;
    } else {
      m.time = times[i];
      m.value = values[i];
    }
    out.push_back(m);
  }
  return out;
}

PeriodEstimate extract_period(const std::vector<double>& times, const std::vector<double>& values) {
  const std::vector<Maximum> mx = find_maxima(times, values);
  if (mx.size() < 2)
    throw ConvergenceFailure("extract_period: fewer than two maxima found");
  PeriodEstimate p;
  p.n_maxima = static_cast<int>(mx.size());
  p.period = (mx.back().time - mx.front().time) / static_cast<double>(mx.size() - 1);
  double spacing = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) spacing = std::max(spacing, times[i] - times[i - 1]);
  p.uncertainty = 0.5 * spacing;
  return p;
}

PeriodEstimate extract_period(const Trajectory& traj, BasisLabel label) {
  return extract_period(traj.times, traj.population(label));
}

double amplitude(const std::vector<double>& times, const std::vector<double>& values, double t_end) {
  check_series(times, values);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < times.size() && times[i] <= t_end; ++i) {
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }
  if (!(hi >= lo)) throw InvalidArgument("amplitude: no samples before t_end");
  return hi - lo;
}

double peak(const std::vector<double>& times, const std::vector<double>& values, double t_end) {
  check_series(times, values);
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < times.size() && times[i] <= t_end; ++i) hi = std::max(hi, values[i]);
  if (!std::isfinite(hi)) throw InvalidArgument("peak: no samples before t_end");
  return hi;
}

}  // namespace sqzcav
