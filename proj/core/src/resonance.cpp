#include "sqzcav/resonance.hpp"

#include "sqzcav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sqzcav {

double resonance_residual(const SystemParams& p) {
  const double c2 = std::pow(std::cosh(p.r_p()), 2), s2 = std::pow(std::sinh(p.r_p()), 2);
  const double g1s = p.g1() * p.g1(), g2s = p.g2() * p.g2();
  const double lhs = g1s * c2 / p.delta_x() + g1s * s2 / p.delta_z() + p.delta_1();
  const double rhs = g2s * c2 / p.delta_y() + g2s * s2 / p.delta_w() + p.delta_2();
  return lhs - rhs;
}

double resonance_coupling(const SystemParams& p) {
  const double c2 = std::pow(std::cosh(p.r_p()), 2), s2 = std::pow(std::sinh(p.r_p()), 2);
  return 0.5 * p.g1() * p.g2() *
         (c2 * (1.0 / p.delta_x() + 1.0 / p.delta_y()) -
          s2 * (1.0 / p.delta_z() + 1.0 / p.delta_w()));
}

ResonanceSolution solve_resonance(const SystemParams& p, const ResonanceOptions& opts) {
  if (p.delta_x() == 0.0 || p.delta_z() == 0.0)
    throw InvalidArgument("solve_resonance: delta_x and delta_z must be nonzero");

  auto f = [&](double d2) { return resonance_residual(p.with_delta_2(d2)); };

  double x = p.delta_1();
  double fx = f(x);
  int it = 0;
  while (!(std::abs(fx) <= opts.tolerance)) {
    if (++it > opts.max_iterations) {
      std::ostringstream os;
      os << "solve_resonance: no convergence after " << opts.max_iterations
         << " iterations (residual " << fx << ")";
      throw ConvergenceFailure(os.str());
    }
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    const double df = (f(x + h) - f(x - h)) / (2.0 * h);
    if (df == 0.0 || !std::isfinite(df))
      throw ConvergenceFailure("solve_resonance: vanishing derivative");
    double step = -fx / df;
    // halve the step until the residual decreases
    double lambda = 1.0, xn = x + step, fn = f(xn);
    for (int k = 0; k < 40 && !(std::abs(fn) < std::abs(fx)); ++k) {
      lambda *= 0.5;
      xn = x + lambda * step;
      fn = f(xn);
    }
    if (!(std::abs(fn) < std::abs(fx)) && std::abs(fx) > opts.tolerance) {
      // stagnation at round-off level counts as converged only within tolerance
      throw ConvergenceFailure("solve_resonance: line search failed");
    }
    x = xn;
    fx = fn;
  }

  const SystemParams q = p.with_delta_2(x);
  if (std::abs(q.delta_y()) < 1e-9 || std::abs(q.delta_w()) < 1e-9)
    throw InvalidArgument("solve_resonance: degenerate root (delta_y or delta_w vanishes)");
  return {x, resonance_coupling(q), fx, it};
}

double effective_coupling(const SystemParams& p, CouplingRegime regime) {
  using namespace atom_index;
  switch (regime) {
    case CouplingRegime::General:
      return hamiltonian_eff_general(p, 0.0)(eg, ge).real();
    case CouplingRegime::EqualCoupling:
      return hamiltonian_eff_equal(p)(eg, ge).real();
    case CouplingRegime::ZeroDetuning:
      return hamiltonian_eff_zero_delta(p)(eg, ge).real();
  }
  throw InvalidArgument("effective_coupling: unknown regime");
}

namespace {

double zero_delta_coupling(double r_p, DetuningPolicy policy) {
  AtomCouplings atoms;  // g1 = g2 = 1, delta_i = 0
  double delta_s = 0.0;
  switch (policy) {
    case DetuningPolicy::FixedDeltaC:
      delta_s = 1500.0 / std::cosh(2.0 * r_p);
      break;
    case DetuningPolicy::ScaledDeltaS:
      delta_s = 10.0 * std::sqrt(std::cosh(2.0 * r_p));
      break;
  }
  const SystemParams p = SystemParams::from_squeezing(atoms, r_p, delta_s);
  return hamiltonian_eff_zero_delta(p, false)(atom_index::eg, atom_index::ge).real();
}

}  // namespace

double enhancement_factor(double r_p, DetuningPolicy policy) {
  if (!(r_p >= 0.0)) throw InvalidArgument("enhancement_factor: r_p must be >= 0");
  return zero_delta_coupling(r_p, policy) / zero_delta_coupling(0.0, policy);
}

std::vector<double> crossing_grid(double center, double half_width, int n) {
  if (n < 3) throw InvalidArgument("crossing_grid: need at least 3 points");
  if (!(half_width > 0.0)) throw InvalidArgument("crossing_grid: half_width must be positive");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double lo = center - half_width;
  const double step = 2.0 * half_width / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + step * i;
  return g;
}

CrossingScan scan_avoided_crossing(const SystemParams& p, const std::vector<double>& grid,
                                   const HilbertSpace& space) {
  if (grid.size() < 3) throw InvalidArgument("scan_avoided_crossing: grid needs >= 3 points");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw InvalidArgument("scan_avoided_crossing: grid must be ascending");

  CrossingScan out;
  out.scan_values = grid;
  out.level_pairs.reserve(grid.size());

  const int d = space.total_dim();
  std::array<Vector, 2> tracked;
  tracked[0] = Vector::Zero(d);
  tracked[1] = Vector::Zero(d);
  tracked[0](space.index(AtomLevel::Excited, AtomLevel::Ground, 0)) = 1.0;
  tracked[1](space.index(AtomLevel::Ground, AtomLevel::Excited, 0)) = 1.0;

  std::vector<double> gaps;
  gaps.reserve(grid.size());
  for (double d2 : grid) {
    const HermitianEigensystem es = eig_hermitian(hamiltonian_squeezed(p.with_delta_2(d2), space));
    std::array<int, 2> pick{-1, -1};
    for (int k = 0; k < 2; ++k) {
      const RealVector ov = (es.vectors.adjoint() * tracked[static_cast<std::size_t>(k)]).cwiseAbs();
      Eigen::Index best = 0;
      const double o = ov.maxCoeff(&best);
      if (o < 0.5) {
        std::ostringstream os;
        os << "scan_avoided_crossing: level tracking ambiguous at delta_2 = " << d2
           << " (overlap " << o << ")";
        throw NumericalDiagnostic(os.str());
      }
      pick[static_cast<std::size_t>(k)] = static_cast<int>(best);
    }
    if (pick[0] == pick[1])
      throw NumericalDiagnostic("scan_avoided_crossing: both levels mapped to one eigenvector");
    for (int k = 0; k < 2; ++k) {
      Vector v = es.vectors.col(pick[static_cast<std::size_t>(k)]);
      // fix the phase so successive overlaps stay real and positive
      const Complex ph = v.dot(tracked[static_cast<std::size_t>(k)]);
      if (std::abs(ph) > 0.0) v *= ph / std::abs(ph);
      tracked[static_cast<std::size_t>(k)] = v;
    }
    const double e0 = es.values(pick[0]), e1 = es.values(pick[1]);
    out.level_pairs.push_back({e0, e1});
    gaps.push_back(std::abs(e0 - e1));
  }

  const auto it = std::min_element(gaps.begin(), gaps.end());
  const std::size_t i = static_cast<std::size_t>(it - gaps.begin());
  if (i == 0 || i + 1 == gaps.size())
    throw InvalidArgument("scan_avoided_crossing: minimum gap lies on the grid edge");

  // parabola through the three points around the minimum, local coordinates
  const double h0 = grid[i - 1] - grid[i], h2 = grid[i + 1] - grid[i];
  const double y0 = gaps[i - 1], y1 = gaps[i], y2 = gaps[i + 1];
  const double s0 = (y0 - y1) / h0, s2 = (y2 - y1) / h2;
  const double a = (s2 - s0) / (h2 - h0);
  const double b = s0 - a * h0;
  if (a > 0.0) {
    const double u = std::clamp(-b / (2.0 * a), h0, h2);
    out.min_gap_location = grid[i] + u;
    out.min_gap = y1 + b * u + a * u * u;
  } else {
    out.min_gap_location = grid[i];
    out.min_gap = y1;
  }
  if (!(out.min_gap > 0.0))
    throw NumericalDiagnostic("scan_avoided_crossing: levels actually cross");
  return out;
}

}  // namespace sqzcav
