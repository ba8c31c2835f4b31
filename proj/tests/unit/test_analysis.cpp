#include "sqzcav/analysis.hpp"
#include "sqzcav/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sqzcav;

namespace {

std::vector<double> sample(const std::vector<double>& t, double (*f)(double)) {
  std::vector<double> out;
  for (double x : t) out.push_back(f(x));
  return out;
}

}  // namespace

TEST(Analysis, PeriodOfSineSquared) {
  const std::vector<double> t = uniform_times(40.0, 2001);
  // sin^2(0.3 t) has period pi / 0.3
  const auto v = sample(t, [](double x) { return std::pow(std::sin(0.3 * x), 2); });
  const PeriodEstimate e = extract_period(t, v);
  EXPECT_NEAR(e.period, std::acos(-1.0) / 0.3, 1e-4);
  EXPECT_EQ(e.n_maxima, 4);
  EXPECT_NEAR(e.uncertainty, 0.5 * (t[1] - t[0]), 1e-12);
}

TEST(Analysis, RipplesDoNotCountAsMaxima) {
  const std::vector<double> t = uniform_times(30.0, 3001);
  const auto v = sample(t, [](double x) {
    return std::pow(std::sin(0.25 * x), 2) + 0.01 * std::sin(9.0 * x);
  });
  const auto maxima = find_maxima(t, v, 0.05);
  ASSERT_EQ(maxima.size(), 2u);
  EXPECT_NEAR(maxima[0].time, std::acos(0.0) / 0.25, 0.5);
  EXPECT_GT(maxima[0].prominence, 0.9);
}

TEST(Analysis, QuadraticRefinementIsExactForParabola) {
  const std::vector<double> t = {0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> v = {0.0, 0.79, 0.96, 0.69, 0.0};
  const auto m = find_maxima(t, v, 1e-3, 0.0);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].index, 2u);
  // vertex of the parabola through (1, .79), (2, .96), (3, .69)
  const double a = 0.5 * (0.69 - 2 * 0.96 + 0.79), b = 0.5 * (0.69 - 0.79);
  EXPECT_NEAR(m[0].time, 2.0 - b / (2 * a), 1e-12);
}

TEST(Analysis, TooFewMaximaIsConvergenceFailure) {
  const std::vector<double> t = uniform_times(1.0, 11);
  EXPECT_THROW(extract_period(t, t), ConvergenceFailure);
  EXPECT_THROW(find_maxima(t, {1.0, 2.0}), InvalidArgument);
}

TEST(Analysis, AmplitudeAndPeakRespectWindow) {
  const std::vector<double> t = {0.0, 1.0, 2.0, 3.0};
  const std::vector<double> v = {0.2, 0.5, 0.1, 0.9};
  EXPECT_DOUBLE_EQ(amplitude(t, v, 2.0), 0.4);
  EXPECT_DOUBLE_EQ(peak(t, v, 2.5), 0.5);
  EXPECT_DOUBLE_EQ(peak(t, v, 3.0), 0.9);
  EXPECT_THROW(peak(t, v, -1.0), InvalidArgument);
}

TEST(Analysis, TrajectoryOverload) {
  Trajectory tr;
  tr.times = uniform_times(20.0, 801);
  for (double x : tr.times) {
    const double s = std::pow(std::sin(0.5 * x), 2);
    tr.atom_populations.push_back({0.0, 1.0 - s, s, 0.0});
  }
  EXPECT_NEAR(extract_period(tr, BasisLabel::GE).period, 2.0 * std::acos(0.0) / 0.5, 1e-3);
  EXPECT_EQ(tr.population(BasisLabel::EG).size(), tr.size());
}
