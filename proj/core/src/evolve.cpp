#include "sqzcav/evolve.hpp"

#include "sqzcav/diagnostics.hpp"
#include "sqzcav/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace odeint = boost::numeric::odeint;

namespace sqzcav {

const char* label_name(BasisLabel label) {
  switch (label) {
    case BasisLabel::EG: return "eg";
    case BasisLabel::GE: return "ge";
    case BasisLabel::EE: return "ee";
    case BasisLabel::GG: return "gg";
  }
  return "?";
}

int atom_pair_index(BasisLabel label) {
  switch (label) {
    case BasisLabel::EG: return atom_index::eg;
    case BasisLabel::GE: return atom_index::ge;
    case BasisLabel::EE: return atom_index::ee;
    case BasisLabel::GG: return atom_index::gg;
  }
  throw InvalidArgument("unknown basis label");
}

std::vector<double> Trajectory::population(BasisLabel label) const {
  const auto k = static_cast<std::size_t>(atom_pair_index(label));
  std::vector<double> out;
  out.reserve(atom_populations.size());
  for (const auto& p : atom_populations) out.push_back(p[k]);
  return out;
}

double Trajectory::max_norm_drift() const {
  double m = 0.0;
  for (double n : norm_or_trace) m = std::max(m, std::abs(n - 1.0));
  return m;
}

double Trajectory::min_positivity() const {
  double m = std::numeric_limits<double>::infinity();
  for (double e : min_eigenvalue) m = std::min(m, e);
  return m;
}

std::vector<double> uniform_times(double t_max, int n) {
  if (n < 2) throw InvalidArgument("time grid needs at least 2 points");
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (n - 1);
  return t;
}

namespace {

void check_times(const std::vector<double>& times) {
  if (times.empty()) throw InvalidArgument("time grid is empty");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InvalidArgument("time grid must be strictly ascending");
}

// Appends one sample of a ket. cavity_dim == 1 for atoms-only kets.
void record_ket(Trajectory& tr, double t, const Complex* psi, int cavity_dim) {
  std::array<double, 4> pops{};
  double photons = 0.0, norm2 = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int n = 0; n < cavity_dim; ++n) {
      const double p = std::norm(psi[a * cavity_dim + n]);
      pops[static_cast<std::size_t>(a)] += p;
      photons += n * p;
      norm2 += p;
    }
  }
  tr.times.push_back(t);
  tr.atom_populations.push_back(pops);
  tr.photons.push_back(photons);
  tr.norm_or_trace.push_back(std::sqrt(norm2));
}

void check_norm(const Trajectory& tr, const SchrodingerOptions& opts) {
  const double drift = tr.max_norm_drift();
  if (drift > opts.max_norm_drift) {
    std::ostringstream os;
    os << "norm drift " << drift << " exceeds " << opts.max_norm_drift;
    throw NumericalDiagnostic(os.str());
  }
}

Trajectory propagate_constant(const Matrix& h, const Vector& psi0, int cavity_dim,
                              const std::vector<double>& times, const SchrodingerOptions& opts) {
  check_times(times);
  const HermitianEigensystem es = eig_hermitian(h);
  const Vector c0 = es.vectors.adjoint() * psi0;
  Trajectory tr;
  Vector c(c0.size());
  for (double t : times) {
    const double dt = t - times.front();
    for (Eigen::Index k = 0; k < c0.size(); ++k) c(k) = std::exp(-kI * (es.values(k) * dt)) * c0(k);
    const Vector psi = es.vectors * c;
    record_ket(tr, t, psi.data(), cavity_dim);
  }
  check_norm(tr, opts);
  return tr;
}

// Real state vector holding interleaved (re, im) pairs.
using RealState = std::vector<double>;

KetTrajectory propagate_td(const TimeDependentMatrix& h, const Vector& psi0, int cavity_dim,
                           const std::vector<double>& times, const SchrodingerOptions& opts,
                           bool keep_states) {
  check_times(times);
  const Eigen::Index n = psi0.size();
  RealState x(static_cast<std::size_t>(2 * n));
  std::copy_n(reinterpret_cast<const double*>(psi0.data()), 2 * n, x.begin());

  auto rhs = [&](const RealState& xs, RealState& dxdt, double t) {
    Eigen::Map<const Vector> psi(reinterpret_cast<const Complex*>(xs.data()), n);
    Eigen::Map<Vector> d(reinterpret_cast<Complex*>(dxdt.data()), n);
    d.noalias() = -kI * (h(t) * psi);
  };

  KetTrajectory out;
  auto obs = [&](const RealState& xs, double t) {
    const auto* psi = reinterpret_cast<const Complex*>(xs.data());
    record_ket(out.trajectory, t, psi, cavity_dim);
    if (keep_states) out.states.emplace_back(Eigen::Map<const Vector>(psi, n));
  };

  auto stepper = odeint::make_dense_output(opts.atol, opts.rtol,
                                           odeint::runge_kutta_dopri5<RealState>());
  const double span = times.back() - times.front();
  const double dt0 = span > 0.0 ? std::min(1e-3, span / 10.0) : 1e-3;
  try {
    odeint::integrate_times(stepper, rhs, x, times.begin(), times.end(), dt0, obs,
                            odeint::max_step_checker(10'000'000));
  } catch (const odeint::step_adjustment_error& e) {
    throw ConvergenceFailure(std::string("step-size underflow: ") + e.what());
  } catch (const odeint::no_progress_error& e) {
    throw ConvergenceFailure(std::string("integrator made no progress: ") + e.what());
  }
  check_norm(out.trajectory, opts);
  return out;
}

}  // namespace

Trajectory evolve_schrodinger(const Operator& h, const Ket& psi0, const std::vector<double>& times,
                              const SchrodingerOptions& opts) {
  if (!(h.space() == psi0.space())) throw InvalidArgument("evolve_schrodinger: space mismatch");
  return propagate_constant(h.matrix(), psi0.data(), h.space().cavity_dim(), times, opts);
}

Trajectory evolve_schrodinger(const HilbertSpace& space, const TimeDependentMatrix& h,
                              const Ket& psi0, const std::vector<double>& times,
                              const SchrodingerOptions& opts) {
  return evolve_schrodinger_states(space, h, psi0, times, opts).trajectory;
}

KetTrajectory evolve_schrodinger_states(const HilbertSpace& space, const TimeDependentMatrix& h,
                                        const Ket& psi0, const std::vector<double>& times,
                                        const SchrodingerOptions& opts) {
  if (!(space == psi0.space())) throw InvalidArgument("evolve_schrodinger: space mismatch");
  const int d = space.total_dim();
  TimeDependentMatrix checked = [&h, d](double t) {
    Matrix m = h(t);
    if (m.rows() != d || m.cols() != d)
      throw InvalidArgument("time-dependent Hamiltonian has wrong shape");
    return m;
  };
  return propagate_td(checked, psi0.data(), space.cavity_dim(), times, opts, true);
}

AtomKet atom_basis(BasisLabel label) {
  AtomKet v = AtomKet::Zero();
  v(atom_pair_index(label)) = 1.0;
  return v;
}

namespace {

void check_atom_ket(const AtomKet& psi0) {
  if (std::abs(psi0.norm() - 1.0) > 1e-9) throw InvalidArgument("atom ket is not normalised");
}

}  // namespace

Trajectory evolve_effective(const AtomMatrix& h, const AtomKet& psi0,
                            const std::vector<double>& times, const SchrodingerOptions& opts) {
  check_atom_ket(psi0);
  return propagate_constant(Matrix(h), Vector(psi0), 1, times, opts);
}

Trajectory evolve_effective(const TimeDependentAtomMatrix& h, const AtomKet& psi0,
                            const std::vector<double>& times, const SchrodingerOptions& opts) {
  check_atom_ket(psi0);
  TimeDependentMatrix wrapped = [&h](double t) { return Matrix(h(t)); };
  return propagate_td(wrapped, Vector(psi0), 1, times, opts, false).trajectory;
}

Ket squeezed_vacuum_state(const HilbertSpace& space, BasisLabel atoms) {
  const int a = atom_pair_index(atoms);
  return Ket::basis(space, static_cast<AtomLevel>(a / 2), static_cast<AtomLevel>(a % 2), 0);
}

Ket lab_vacuum_state(const HilbertSpace& space, BasisLabel atoms, double r_p, double theta_p) {
  // a |0_lab> = 0 with a = cosh(r) a_s - e^{-i theta} sinh(r) a_s^dag gives
  // c_{k+1} = e^{-i theta} tanh(r) sqrt(k/(k+1)) c_{k-1} on even k+1.
  const int nc = space.cavity_dim();
  Eigen::VectorXcd cav = Eigen::VectorXcd::Zero(nc);
  cav(0) = 1.0;
  const Complex q = std::exp(-kI * theta_p) * std::tanh(r_p);
  for (int m = 2; m < nc; m += 2) cav(m) = q * std::sqrt((m - 1.0) / m) * cav(m - 2);
  // weight of the untruncated state is 1/sqrt(1 - tanh^2) = cosh(r)
  const double full = std::cosh(r_p);
  const double kept = cav.squaredNorm();
  const double lost = 1.0 - kept / full;
  if (lost > 1e-6) {
    std::ostringstream os;
    os << "lab-frame vacuum truncated at n_max = " << space.n_max() << ": discarded weight "
       << lost;
    warn(os.str());
  }
  cav /= std::sqrt(kept);
  Vector v = Vector::Zero(space.total_dim());
  v.segment(atom_pair_index(atoms) * nc, nc) = cav;
  return {space, v};
}

}  // namespace sqzcav
