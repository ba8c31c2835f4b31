#include "sqzcav/model.hpp"

#include "sqzcav/diagnostics.hpp"
#include "sqzcav/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace sqzcav {

namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " is not finite");
}

}  // namespace

SqueezeSector derive_squeezing(double delta_c, double omega_p_amp) {
  check_finite(delta_c, "delta_c");
  check_finite(omega_p_amp, "omega_p_amp");
  if (delta_c == 0.0) throw InvalidArgument("delta_c must be nonzero");
  const double alpha = omega_p_amp / delta_c;
  if (!(std::abs(alpha) < 1.0)) {
    std::ostringstream os;
    os << "unstable parametric drive: |alpha| = " << std::abs(alpha) << " >= 1";
    throw InvalidArgument(os.str());
  }
  SqueezeSector s;
  s.delta_c = delta_c;
  s.omega_p_amp = omega_p_amp;
  s.alpha = alpha;
  s.r_p = 0.5 * std::atanh(alpha);
  s.delta_s = delta_c * std::sqrt((1.0 - alpha) * (1.0 + alpha));
  return s;
}

SqueezeSector squeezing_from_parameters(double r_p, double delta_s) {
  check_finite(r_p, "r_p");
  check_finite(delta_s, "delta_s");
  if (delta_s == 0.0) throw InvalidArgument("delta_s must be nonzero");
  SqueezeSector s;
  s.r_p = r_p;
  s.delta_s = delta_s;
  s.delta_c = delta_s * std::cosh(2.0 * r_p);
  s.omega_p_amp = delta_s * std::sinh(2.0 * r_p);
  s.alpha = std::tanh(2.0 * r_p);
  return s;
}

SystemParams::SystemParams(const AtomCouplings& atoms, const SqueezeSector& sq)
    : atoms_(atoms), sq_(sq) {
  check_finite(atoms.g1, "g1");
  check_finite(atoms.g2, "g2");
  check_finite(atoms.delta_1, "delta_1");
  check_finite(atoms.delta_2, "delta_2");
  check_finite(atoms.theta_p, "theta_p");
}

SystemParams SystemParams::from_pump(const AtomCouplings& atoms, double delta_c,
                                     double omega_p_amp) {
  SqueezeSector sq = derive_squeezing(delta_c, omega_p_amp);
  // round trip through the other parameterisation
  const SqueezeSector back = squeezing_from_parameters(sq.r_p, sq.delta_s);
  if (!close_rel(back.delta_c, sq.delta_c, 1e-9) ||
      !close_rel(back.omega_p_amp, sq.omega_p_amp, 1e-9))
    throw NumericalDiagnostic("squeezing parameterisations disagree after round trip");
  return {atoms, sq};
}

SystemParams SystemParams::from_squeezing(const AtomCouplings& atoms, double r_p, double delta_s) {
  SqueezeSector sq = squeezing_from_parameters(r_p, delta_s);
  if (!close_rel(std::cosh(2.0 * sq.r_p) * sq.delta_s, sq.delta_c, 1e-12))
    throw NumericalDiagnostic("squeezing parameterisations disagree after round trip");
  return {atoms, sq};
}

SystemParams SystemParams::with_delta_2(double delta_2) const {
  AtomCouplings a = atoms_;
  a.delta_2 = delta_2;
  return {a, sq_};
}

SystemParams SystemParams::with_couplings(const AtomCouplings& atoms) const { return {atoms, sq_}; }

void ReservoirParams::validate() const {
  if (!(kappa >= 0.0)) throw InvalidArgument("kappa must be >= 0");
  if (!(gamma >= 0.0)) throw InvalidArgument("gamma must be >= 0");
  if (!(n_th >= 0.0)) throw InvalidArgument("n_th must be >= 0");
  if (squeezed_drive) {
    check_finite(squeezed_drive->r_e, "r_e");
    check_finite(squeezed_drive->theta_e, "theta_e");
  }
}

NoiseCoefficients noise_coefficients(const ReservoirParams& r, double r_p, double theta_p) {
  r.validate();
  const double n = r.n_th;
  const double re = r.squeezed_drive ? r.squeezed_drive->r_e : 0.0;
  const double te = r.squeezed_drive ? r.squeezed_drive->theta_e : 0.0;
  const double chp = std::cosh(r_p), shp = std::sinh(r_p);
  const double che = std::cosh(re), she = std::sinh(re);
  const double phi = te + theta_p;

  NoiseCoefficients c;
  c.N = shp * shp;
  c.M = chp * shp * std::exp(-kI * theta_p);
  c.N_prime = n * std::cosh(2.0 * re) + she * she;
  c.M_prime = (2.0 * n + 1.0) * che * she * std::exp(kI * te);
  c.N_s = c.N_prime * std::cosh(2.0 * r_p) + c.N +
          (n + 0.5) * std::sinh(2.0 * re) * std::sinh(2.0 * r_p) * std::cos(phi);
  c.M_s = -std::exp(-kI * theta_p) * (2.0 * n + 1.0) *
          (0.5 * std::sinh(2.0 * r_p) * std::cosh(2.0 * re) +
           0.5 * std::sinh(2.0 * re) *
               (std::exp(kI * phi) * chp * chp + std::exp(-kI * phi) * shp * shp));
  return c;
}

namespace {

struct Ops {
  Operator a, ad, sz1, sz2, sp1, sp2, sm1, sm2;
};

Ops build_ops(const HilbertSpace& space) {
  Operator a = annihilation(space);
  Operator ad = a.adjoint();
  return {a,
          ad,
          atom_operator(space, 1, AtomOperatorKind::SigmaZ),
          atom_operator(space, 2, AtomOperatorKind::SigmaZ),
          atom_operator(space, 1, AtomOperatorKind::SigmaPlus),
          atom_operator(space, 2, AtomOperatorKind::SigmaPlus),
          atom_operator(space, 1, AtomOperatorKind::SigmaMinus),
          atom_operator(space, 2, AtomOperatorKind::SigmaMinus)};
}

Operator hermitian_part(const Operator& h) {
  return {h.space(), 0.5 * (h.matrix() + h.matrix().adjoint())};
}

}  // namespace

Operator hamiltonian_lab(const SystemParams& p, const HilbertSpace& space) {
  const Ops o = build_ops(space);
  const Complex ph = std::exp(kI * p.theta_p());
  Operator h = p.delta_c() * (o.ad * o.a);
  h += (0.5 * p.delta_1()) * o.sz1;
  h += (0.5 * p.delta_2()) * o.sz2;
  h += p.g1() * (o.sp1 * o.a + o.ad * o.sm1);
  h += p.g2() * (o.sp2 * o.a + o.ad * o.sm2);
  h += (0.5 * p.omega_p_amp()) * (ph * (o.a * o.a) + std::conj(ph) * (o.ad * o.ad));
  return hermitian_part(h);
}

Operator hamiltonian_squeezed_free(const SystemParams& p, const HilbertSpace& space) {
  const Ops o = build_ops(space);
  Operator h = p.delta_s() * (o.ad * o.a);
  h += (0.5 * p.delta_1()) * o.sz1;
  h += (0.5 * p.delta_2()) * o.sz2;
  return h;
}

Operator hamiltonian_squeezed(const SystemParams& p, const HilbertSpace& space) {
  const Ops o = build_ops(space);
  const double c = std::cosh(p.r_p()), s = std::sinh(p.r_p());
  const Complex ph = std::exp(-kI * p.theta_p());
  Operator h = hamiltonian_squeezed_free(p, space);
  const std::array<double, 2> g{p.g1(), p.g2()};
  const std::array<const Operator*, 2> sp{&o.sp1, &o.sp2};
  const std::array<const Operator*, 2> sm{&o.sm1, &o.sm2};
  for (int i = 0; i < 2; ++i) {
    h += (g[i] * c) * (*sp[i] * o.a + o.ad * *sm[i]);
    h -= (g[i] * s) * (ph * (*sp[i] * o.ad) + std::conj(ph) * (o.a * *sm[i]));
  }
  return hermitian_part(h);
}

InteractionHamiltonian::InteractionHamiltonian(const SystemParams& p, const HilbertSpace& space)
    : space_(space),
      dx_(p.delta_x()),
      dy_(p.delta_y()),
      dz_(p.delta_z()),
      dw_(p.delta_w()) {
  if (std::abs(p.theta_p()) > 1e-12)
    throw InvalidArgument("interaction-picture Hamiltonian requires theta_p = 0");
  const Ops o = build_ops(space);
  const double c = std::cosh(p.r_p()), s = std::sinh(p.r_p());
  up_x_ = (p.g1() * c) * (o.a * o.sp1).matrix();
  up_y_ = (p.g2() * c) * (o.a * o.sp2).matrix();
  up_z_ = (-p.g1() * s) * (o.ad * o.sp1).matrix();
  up_w_ = (-p.g2() * s) * (o.ad * o.sp2).matrix();
}

Matrix InteractionHamiltonian::matrix_at(double t) const {
  Matrix up = std::exp(kI * (dx_ * t)) * up_x_ + std::exp(kI * (dy_ * t)) * up_y_ +
              std::exp(kI * (dz_ * t)) * up_z_ + std::exp(kI * (dw_ * t)) * up_w_;
  Matrix h = up + up.adjoint();
  return h;
}

Operator hamiltonian_interaction(const SystemParams& p, const HilbertSpace& space, double t) {
  return InteractionHamiltonian(p, space).at(t);
}

namespace {

void require_nonzero(double v, const char* name) {
  if (v == 0.0) throw InvalidArgument(std::string(name) + " is zero; effective model undefined");
}

}  // namespace

AtomMatrix hamiltonian_eff_general(const SystemParams& p, double t, bool check_detuning) {
  const double dx = p.delta_x(), dy = p.delta_y(), dz = p.delta_z(), dw = p.delta_w();
  require_nonzero(dx, "delta_x");
  require_nonzero(dy, "delta_y");
  require_nonzero(dz, "delta_z");
  require_nonzero(dw, "delta_w");
  if (check_detuning) large_detuning_check(p);

  const double c2 = std::pow(std::cosh(p.r_p()), 2), s2 = std::pow(std::sinh(p.r_p()), 2);
  const double g1 = p.g1(), g2 = p.g2();
  // Stark shifts: atom 1 excited / ground, atom 2 excited / ground
  const double e1 = g1 * g1 * c2 / dx, e2 = g2 * g2 * c2 / dy;
  const double gr1 = -g1 * g1 * s2 / dz, gr2 = -g2 * g2 * s2 / dw;

  using namespace atom_index;
  AtomMatrix h = AtomMatrix::Zero();
  h(ee, ee) = e1 + e2;
  h(eg, eg) = e1 + gr2;
  h(ge, ge) = gr1 + e2;
  h(gg, gg) = gr1 + gr2;

  const Complex x = 0.5 * g1 * g2 * c2 * (1.0 / dx + 1.0 / dy) * std::exp(kI * ((dx - dy) * t)) -
                    0.5 * g1 * g2 * s2 * (1.0 / dz + 1.0 / dw) * std::exp(kI * ((dz - dw) * t));
  h(eg, ge) = x;
  h(ge, eg) = std::conj(x);
  return h;
}

AtomMatrix hamiltonian_eff_equal(const SystemParams& p, bool check_detuning) {
  if (!close_rel(p.g1(), p.g2(), 1e-12) || !close_rel(p.delta_1(), p.delta_2(), 1e-12))
    throw InvalidArgument("equal-coupling model requires g1 == g2 and delta_1 == delta_2");
  const double dx = p.delta_x(), dz = p.delta_z();
  require_nonzero(dx, "delta_x");
  require_nonzero(dz, "delta_z");
  if (check_detuning) large_detuning_check(p);

  const double g = p.g1();
  const double c2 = std::pow(std::cosh(p.r_p()), 2), s2 = std::pow(std::sinh(p.r_p()), 2);
  const double e = g * g * c2 / dx;
  const double gr = -g * g * s2 / dz;

  using namespace atom_index;
  AtomMatrix h = AtomMatrix::Zero();
  h(ee, ee) = 2.0 * e;
  h(eg, eg) = e + gr;
  h(ge, ge) = e + gr;
  h(gg, gg) = 2.0 * gr;
  h(eg, ge) = e + gr;  // g^2 c^2/dx - g^2 s^2/dz
  h(ge, eg) = e + gr;
  return h;
}

AtomMatrix hamiltonian_eff_zero_delta(const SystemParams& p, bool check_detuning) {
  if (std::abs(p.delta_1()) > 1e-12 || std::abs(p.delta_2()) > 1e-12)
    throw InvalidArgument("zero-detuning model requires delta_1 == delta_2 == 0");
  if (!close_rel(p.g1(), p.g2(), 1e-12))
    throw InvalidArgument("zero-detuning model requires g1 == g2");
  require_nonzero(p.delta_s(), "delta_s");
  if (check_detuning) large_detuning_check(p);

  const double g = p.g1(), r = p.r_p();
  const double k = g * g / p.delta_s();
  const double e = -k * std::pow(std::cosh(r), 2);
  const double gr = -k * std::pow(std::sinh(r), 2);

  using namespace atom_index;
  AtomMatrix h = AtomMatrix::Zero();
  h(ee, ee) = 2.0 * e;
  h(eg, eg) = e + gr;
  h(ge, ge) = e + gr;
  h(gg, gg) = 2.0 * gr;
  h(eg, ge) = k * std::cosh(2.0 * r);
  h(ge, eg) = k * std::cosh(2.0 * r);
  h(ee, gg) = -k * std::sinh(2.0 * r);
  h(gg, ee) = -k * std::sinh(2.0 * r);
  return h;
}

DetuningCheck large_detuning_check(const SystemParams& p, bool emit) {
  DetuningCheck c;
  c.min_detuning = std::min({std::abs(p.delta_x()), std::abs(p.delta_y()), std::abs(p.delta_z()),
                             std::abs(p.delta_w())});
  const double ch = std::cosh(p.r_p()), sh = std::abs(std::sinh(p.r_p()));
  c.max_coupling = std::max(std::abs(p.g1()), std::abs(p.g2())) * std::max(ch, sh);
  c.ratio = c.max_coupling > 0.0 ? c.min_detuning / c.max_coupling
                                 : std::numeric_limits<double>::infinity();
  c.ok = c.ratio >= 10.0;
  if (!c.ok && emit) {
    std::ostringstream os;
    os << "large-detuning condition violated: min detuning " << c.min_detuning
       << " is only " << c.ratio << "x the largest dressed coupling " << c.max_coupling;
    warn(os.str());
  }
  return c;
}

}  // namespace sqzcav
