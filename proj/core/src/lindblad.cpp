#include "sqzcav/errors.hpp"
#include "sqzcav/evolve.hpp"

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace odeint = boost::numeric::odeint;

namespace sqzcav {

const char* variant_name(DissipatorVariant v) {
  switch (v) {
    case DissipatorVariant::ThermalLab: return "thermal_lab";
    case DissipatorVariant::SqueezedFrameThermal: return "squeezed_frame_thermal";
    case DissipatorVariant::SqueezedReservoirLab: return "squeezed_reservoir_lab";
    case DissipatorVariant::SqueezedFrameSqueezedReservoir: return "squeezed_frame_squeezed_reservoir";
    case DissipatorVariant::MatchedLindblad: return "matched_lindblad";
  }
  return "?";
}

namespace {

// distance of x from the nearest point of pi + 2 pi Z
double phase_offset_from_pi(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  double y = std::fmod(x - std::numbers::pi, two_pi);
  if (y > std::numbers::pi) y -= two_pi;
  if (y < -std::numbers::pi) y += two_pi;
  return std::abs(y);
}

}  // namespace

DissipatorSpec make_dissipator(DissipatorVariant variant, const ReservoirParams& reservoir,
                               const SystemParams& p) {
  reservoir.validate();
  const bool drive = reservoir.squeezed_drive.has_value();
  switch (variant) {
    case DissipatorVariant::ThermalLab:
    case DissipatorVariant::SqueezedFrameThermal:
      if (drive)
        throw InvalidArgument(std::string(variant_name(variant)) +
                              " does not take a squeezed drive");
      break;
    case DissipatorVariant::SqueezedReservoirLab:
    case DissipatorVariant::SqueezedFrameSqueezedReservoir:
      break;
    case DissipatorVariant::MatchedLindblad: {
      if (!drive) throw InvalidArgument("matched_lindblad needs a squeezed drive");
      const SqueezedDrive& sd = *reservoir.squeezed_drive;
      if (std::abs(sd.r_e - p.r_p()) > 1e-12)
        throw InvalidArgument("matched_lindblad needs r_e == r_p");
      if (phase_offset_from_pi(sd.theta_e + p.theta_p()) > 1e-12)
        throw InvalidArgument("matched_lindblad needs theta_e + theta_p == pi (mod 2 pi)");
      break;
    }
  }
  return {variant, reservoir, p.r_p(), p.theta_p()};
}

CavityChannel cavity_channel(const DissipatorSpec& spec) {
  const double n = spec.reservoir.n_th;
  const NoiseCoefficients nc = noise_coefficients(spec.reservoir, spec.r_p, spec.theta_p);
  switch (spec.variant) {
    case DissipatorVariant::ThermalLab:
    case DissipatorVariant::MatchedLindblad:
      return {n + 1.0, n, Complex{}};
    case DissipatorVariant::SqueezedFrameThermal: {
      const double up = (2.0 * nc.N + 1.0) * n + nc.N;
      return {up + 1.0, up, -nc.M * (2.0 * n + 1.0)};
    }
    case DissipatorVariant::SqueezedReservoirLab:
      return {nc.N_prime + 1.0, nc.N_prime, -nc.M_prime};
    case DissipatorVariant::SqueezedFrameSqueezedReservoir:
      // +M_s: reduces to the squeezed-frame thermal coefficient at r_e = 0
      // and to the lab-frame squeezed reservoir at r_p = 0
      return {nc.N_s + 1.0, nc.N_s, nc.M_s};
  }
  throw InvalidArgument("unknown dissipator variant");
}

namespace {

// L(O) rho = O^dag O rho - 2 O rho O^dag + rho O^dag O
Matrix dissipator_L(const Matrix& o, const Matrix& rho) {
  const Matrix odo = o.adjoint() * o;
  return odo * rho - 2.0 * o * rho * o.adjoint() + rho * odo;
}

// L'(O) rho = O O rho - 2 O rho O + rho O O
Matrix dissipator_Lp(const Matrix& o, const Matrix& rho) {
  const Matrix oo = o * o;
  return oo * rho - 2.0 * o * rho * o + rho * oo;
}

}  // namespace

LindbladGenerator::LindbladGenerator(const Operator& h, const DissipatorSpec& spec)
    : space_(h.space()), h_(h.matrix()), cav_(cavity_channel(spec)) {
  if (!h.is_hermitian(1e-12 * std::max(1.0, h.matrix().cwiseAbs().maxCoeff())))
    throw InvalidArgument("master equation needs a Hermitian Hamiltonian");
  l_ = std::sqrt(spec.reservoir.kappa) * annihilation(space_).matrix();
  for (int x = 0; x < 2; ++x)
    atoms_[static_cast<std::size_t>(x)] =
        std::sqrt(spec.reservoir.gamma) *
        atom_operator(space_, x + 1, AtomOperatorKind::SigmaMinus).matrix();
}

Matrix LindbladGenerator::apply(const Matrix& rho) const {
  Matrix diss = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& lx : atoms_) diss += dissipator_L(lx, rho);
  const Matrix ld = l_.adjoint();
  diss += cav_.c_down * dissipator_L(l_, rho);
  diss += cav_.c_up * dissipator_L(ld, rho);
  if (cav_.c_cross != Complex{}) {
    diss += cav_.c_cross * dissipator_Lp(ld, rho);
    diss += std::conj(cav_.c_cross) * dissipator_Lp(l_, rho);
  }
  return kI * (rho * h_ - h_ * rho) - 0.5 * diss;
}

namespace {

using Triplets = std::vector<Eigen::Triplet<Complex>>;

// coef * (A kron B) appended as triplets.
void add_kron(Triplets& out, Complex coef, const Matrix& a, const Matrix& b) {
  const Eigen::Index rb = b.rows(), cb = b.cols();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> nzb;
  for (Eigen::Index j = 0; j < cb; ++j)
    for (Eigen::Index i = 0; i < rb; ++i)
      if (b(i, j) != Complex{}) nzb.emplace_back(i, j);
  for (Eigen::Index ja = 0; ja < a.cols(); ++ja)
    for (Eigen::Index ia = 0; ia < a.rows(); ++ia) {
      const Complex x = a(ia, ja);
      if (x == Complex{}) continue;
      for (const auto& [ib, jb] : nzb)
        out.emplace_back(static_cast<int>(ia * rb + ib), static_cast<int>(ja * cb + jb),
                         coef * x * b(ib, jb));
    }
}

// -1/2 c L(O) as a superoperator on column-major vec.
void add_L(Triplets& t, Complex c, const Matrix& o, const Matrix& id) {
  const Matrix odo = o.adjoint() * o;
  add_kron(t, -0.5 * c, id, odo);
  add_kron(t, c, o.conjugate(), o);
  add_kron(t, -0.5 * c, odo.transpose(), id);
}

void add_Lp(Triplets& t, Complex c, const Matrix& o, const Matrix& id) {
  const Matrix oo = o * o;
  add_kron(t, -0.5 * c, id, oo);
  add_kron(t, c, o.transpose(), o);
  add_kron(t, -0.5 * c, oo.transpose(), id);
}

}  // namespace

Eigen::SparseMatrix<Complex> LindbladGenerator::superoperator() const {
  const Eigen::Index d = h_.rows();
  const Matrix id = Matrix::Identity(d, d);
  Triplets t;
  // i rho H - i H rho
  add_kron(t, kI, h_.transpose(), id);
  add_kron(t, -kI, id, h_);
  for (const Matrix& lx : atoms_) add_L(t, 1.0, lx, id);
  const Matrix ld = l_.adjoint();
  add_L(t, cav_.c_down, l_, id);
  add_L(t, cav_.c_up, ld, id);
  if (cav_.c_cross != Complex{}) {
    add_Lp(t, cav_.c_cross, ld, id);
    add_Lp(t, std::conj(cav_.c_cross), l_, id);
  }
  Eigen::SparseMatrix<Complex> s(d * d, d * d);
  s.setFromTriplets(t.begin(), t.end());
  s.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return v != Complex{}; });
  return s;
}

Matrix lindblad_rhs(const Operator& h, const DissipatorSpec& spec, const DensityMatrix& rho) {
  if (!(h.space() == rho.space())) throw InvalidArgument("lindblad_rhs: space mismatch");
  return LindbladGenerator(h, spec).apply(rho.data());
}

namespace {

void record_density(Trajectory& tr, double t, const Matrix& rho, int cavity_dim) {
  std::array<double, 4> pops{};
  double photons = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int n = 0; n < cavity_dim; ++n) {
      const double p = rho(a * cavity_dim + n, a * cavity_dim + n).real();
      pops[static_cast<std::size_t>(a)] += p;
      photons += n * p;
    }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  tr.times.push_back(t);
  tr.atom_populations.push_back(pops);
  tr.photons.push_back(photons);
  tr.norm_or_trace.push_back(rho.trace().real());
  tr.min_eigenvalue.push_back(es.eigenvalues().minCoeff());
}

void check_density(const Trajectory& tr, const MasterOptions& opts) {
  const double drift = std::abs(tr.norm_or_trace.back() - 1.0);
  const double mineig = tr.min_eigenvalue.back();
  if (drift > opts.max_trace_drift) {
    std::ostringstream os;
    os << "trace drift " << drift << " at t = " << tr.times.back() << " exceeds "
       << opts.max_trace_drift;
    throw NumericalDiagnostic(os.str());
  }
  if (mineig < opts.min_eigenvalue) {
    std::ostringstream os;
    os << "density matrix lost positivity at t = " << tr.times.back() << " (min eigenvalue "
       << mineig << ")";
    throw NumericalDiagnostic(os.str());
  }
}

void symmetrize(Matrix& rho) { rho = (0.5 * (rho + rho.adjoint())).eval(); }

Trajectory master_exponential(const LindbladGenerator& gen, const DensityMatrix& rho0,
                              const std::vector<double>& times, const MasterOptions& opts) {
  const Eigen::SparseMatrix<Complex> s = gen.superoperator();
  const Eigen::Index d = rho0.data().rows();
  const int cav = gen.space().cavity_dim();

  // closure of supp(rho0) under the generator and under transposition
  std::vector<char> seen(static_cast<std::size_t>(d * d), 0);
  std::vector<Eigen::Index> queue;
  auto visit = [&](Eigen::Index k) {
    if (!seen[static_cast<std::size_t>(k)]) {
      seen[static_cast<std::size_t>(k)] = 1;
      queue.push_back(k);
    }
  };
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      if (rho0.data()(i, j) != Complex{}) visit(j * d + i);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Eigen::Index k = queue[q];
    visit((k % d) * d + k / d);
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(s, k); it; ++it) visit(it.row());
  }
  std::sort(queue.begin(), queue.end());
  const auto m = static_cast<Eigen::Index>(queue.size());
  std::vector<Eigen::Index> pos(static_cast<std::size_t>(d * d), -1);
  for (Eigen::Index r = 0; r < m; ++r) pos[static_cast<std::size_t>(queue[static_cast<std::size_t>(r)])] = r;

  Matrix block = Matrix::Zero(m, m);
  for (Eigen::Index c = 0; c < m; ++c)
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(s, queue[static_cast<std::size_t>(c)]); it; ++it)
      block(pos[static_cast<std::size_t>(it.row())], c) = it.value();

  auto gather = [&](const Matrix& rho) {
    Vector w(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      const Eigen::Index k = queue[static_cast<std::size_t>(r)];
      w(r) = rho(k % d, k / d);
    }
    return w;
  };
  auto scatter = [&](const Vector& w) {
    Matrix rho = Matrix::Zero(d, d);
    for (Eigen::Index r = 0; r < m; ++r) {
      const Eigen::Index k = queue[static_cast<std::size_t>(r)];
      rho(k % d, k / d) = w(r);
    }
    return rho;
  };

  Trajectory tr;
  tr.density = true;
  Matrix rho = rho0.data();
  record_density(tr, times.front(), rho, cav);
  Vector w = gather(rho);

  double cached_dt = -1.0;
  Matrix prop;
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double dt = times[k] - times[k - 1];
    if (std::abs(dt - cached_dt) > 1e-12 * std::max(1.0, std::abs(dt))) {
      prop = (block * dt).exp();
      cached_dt = dt;
    }
    w = prop * w;
    rho = scatter(w);
    symmetrize(rho);
    w = gather(rho);
    record_density(tr, times[k], rho, cav);
    check_density(tr, opts);
  }
  return tr;
}

using RealState = std::vector<double>;

Trajectory master_rk(const LindbladGenerator& gen, const DensityMatrix& rho0,
                     const std::vector<double>& times, const MasterOptions& opts) {
  const Eigen::Index d = rho0.data().rows();
  const int cav = gen.space().cavity_dim();
  RealState x(static_cast<std::size_t>(2 * d * d));
  auto as_matrix = [d](RealState& xs) {
    return Eigen::Map<Matrix>(reinterpret_cast<Complex*>(xs.data()), d, d);
  };
  as_matrix(x) = rho0.data();

  auto rhs = [&](const RealState& xs, RealState& dxdt, double) {
    Eigen::Map<const Matrix> rho(reinterpret_cast<const Complex*>(xs.data()), d, d);
    Eigen::Map<Matrix>(reinterpret_cast<Complex*>(dxdt.data()), d, d) = gen.apply(rho);
  };

  auto stepper = odeint::make_controlled(opts.atol, opts.rtol,
                                         odeint::runge_kutta_dopri5<RealState>());
  Trajectory tr;
  tr.density = true;
  record_density(tr, times.front(), as_matrix(x), cav);

  double t = times.front();
  double dt = std::min(1e-3, (times.back() - times.front()) / 10.0);
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double target = times[k];
    const double eps = 1e-13 * std::max(1.0, std::abs(target));
    while (target - t > eps) {
      double h = std::min(dt, target - t);
      const bool last = h >= target - t;
      const odeint::controlled_step_result res = stepper.try_step(rhs, x, t, h);
      if (res == odeint::success) {
        Matrix rho = as_matrix(x);
        symmetrize(rho);
        as_matrix(x) = rho;
        stepper.reset();  // cached derivative is stale after symmetrisation
        if (last) t = target;
        dt = last ? std::max(dt, h) : h;
      } else {
        dt = h;
        if (dt < 1e-14 * std::max(1.0, std::abs(t)))
          throw ConvergenceFailure("master equation: step-size underflow");
      }
    }
    record_density(tr, target, as_matrix(x), cav);
    check_density(tr, opts);
  }
  return tr;
}

}  // namespace

Trajectory evolve_master(const Operator& h, const DissipatorSpec& spec, const DensityMatrix& rho0,
                         const std::vector<double>& times, const MasterOptions& opts) {
  if (!(h.space() == rho0.space())) throw InvalidArgument("evolve_master: space mismatch");
  if (times.empty()) throw InvalidArgument("time grid is empty");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InvalidArgument("time grid must be strictly ascending");
  const LindbladGenerator gen(h, spec);
  switch (opts.method) {
    case MasterMethod::Exponential:
      return master_exponential(gen, rho0, times, opts);
    case MasterMethod::AdaptiveRK:
      return master_rk(gen, rho0, times, opts);
  }
  throw InvalidArgument("unknown master method");
}

}  // namespace sqzcav
