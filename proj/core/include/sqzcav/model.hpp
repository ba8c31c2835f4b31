#pragma once

// Parameter records and Hamiltonian builders. All frequencies are in units
// of g1 unless stated otherwise; times are in units of 1/g1.

#include "sqzcav/fock_algebra.hpp"

#include <optional>

namespace sqzcav {

/// Both parameterisations of the parametric drive, kept mutually consistent.
struct SqueezeSector {
  double delta_c = 0.0;
  double omega_p_amp = 0.0;
  double alpha = 0.0;
  double r_p = 0.0;
  double delta_s = 0.0;
};

/// alpha = omega_p/delta_c, r_p = artanh(alpha)/2, delta_s = delta_c*sqrt(1-alpha^2).
/// Throws InvalidArgument when |alpha| >= 1 or delta_c == 0.
SqueezeSector derive_squeezing(double delta_c, double omega_p_amp);

/// Inverse: delta_c = delta_s*cosh(2 r_p), omega_p = delta_s*sinh(2 r_p).
SqueezeSector squeezing_from_parameters(double r_p, double delta_s);

struct AtomCouplings {
  double g1 = 1.0;
  double g2 = 1.0;
  double delta_1 = 0.0;
  double delta_2 = 0.0;
  double theta_p = 0.0;
};

class SystemParams {
 public:
  static SystemParams from_pump(const AtomCouplings& atoms, double delta_c, double omega_p_amp);
  static SystemParams from_squeezing(const AtomCouplings& atoms, double r_p, double delta_s);

  SystemParams with_delta_2(double delta_2) const;
  SystemParams with_couplings(const AtomCouplings& atoms) const;

  const AtomCouplings& atoms() const noexcept { return atoms_; }
  const SqueezeSector& squeeze() const noexcept { return sq_; }

  double g1() const noexcept { return atoms_.g1; }
  double g2() const noexcept { return atoms_.g2; }
  double delta_1() const noexcept { return atoms_.delta_1; }
  double delta_2() const noexcept { return atoms_.delta_2; }
  double theta_p() const noexcept { return atoms_.theta_p; }
  double delta_c() const noexcept { return sq_.delta_c; }
  double omega_p_amp() const noexcept { return sq_.omega_p_amp; }
  double alpha() const noexcept { return sq_.alpha; }
  double r_p() const noexcept { return sq_.r_p; }
  double delta_s() const noexcept { return sq_.delta_s; }

  double delta_x() const noexcept { return atoms_.delta_1 - sq_.delta_s; }
  double delta_y() const noexcept { return atoms_.delta_2 - sq_.delta_s; }
  double delta_z() const noexcept { return atoms_.delta_1 + sq_.delta_s; }
  double delta_w() const noexcept { return atoms_.delta_2 + sq_.delta_s; }

 private:
  SystemParams(const AtomCouplings& atoms, const SqueezeSector& sq);
  AtomCouplings atoms_;
  SqueezeSector sq_;
};

struct SqueezedDrive {
  double r_e = 0.0;
  double theta_e = 0.0;
};

struct ReservoirParams {
  double kappa = 0.0;
  double gamma = 0.0;
  double n_th = 0.0;
  std::optional<SqueezedDrive> squeezed_drive;

  /// Throws InvalidArgument on negative rates or photon number.
  void validate() const;
};

struct NoiseCoefficients {
  double N = 0.0;
  Complex M{};
  double N_prime = 0.0;
  Complex M_prime{};
  double N_s = 0.0;
  Complex M_s{};
};

/// Squeezed-frame, squeezed-reservoir and combined noise coefficients. An
/// absent squeezed drive is treated as r_e = 0.
NoiseCoefficients noise_coefficients(const ReservoirParams& r, double r_p, double theta_p);

Operator hamiltonian_lab(const SystemParams& p, const HilbertSpace& space);
Operator hamiltonian_squeezed(const SystemParams& p, const HilbertSpace& space);
/// Diagonal part of hamiltonian_squeezed: delta_s a_s^dag a_s + sum_i delta_i/2 sigma_z^i.
Operator hamiltonian_squeezed_free(const SystemParams& p, const HilbertSpace& space);

/// Interaction-picture Hamiltonian with respect to hamiltonian_squeezed_free.
/// Only theta_p = 0 is supported.
class InteractionHamiltonian {
 public:
  InteractionHamiltonian(const SystemParams& p, const HilbertSpace& space);

  const HilbertSpace& space() const noexcept { return space_; }
  Matrix matrix_at(double t) const;
  Operator at(double t) const { return {space_, matrix_at(t)}; }

 private:
  HilbertSpace space_;
  // raising parts: sigma_+^i a_s and sigma_+^i a_s^dag with their frequencies
  Matrix up_x_, up_y_, up_z_, up_w_;
  double dx_, dy_, dz_, dw_;
};

Operator hamiltonian_interaction(const SystemParams& p, const HilbertSpace& space, double t);

// Two-atom (4x4) space. Index = 2*a1 + a2 with e=0, g=1: ee, eg, ge, gg.
using AtomMatrix = Eigen::Matrix4cd;
namespace atom_index {
inline constexpr int ee = 0;
inline constexpr int eg = 1;
inline constexpr int ge = 2;
inline constexpr int gg = 3;
}  // namespace atom_index

// The effective builders run large_detuning_check and warn (never throw) when
// it fails; pass check_detuning = false to skip it.

/// Unequal-coupling effective model with explicit time phases.
AtomMatrix hamiltonian_eff_general(const SystemParams& p, double t, bool check_detuning = true);
/// Equal couplings and equal detunings.
AtomMatrix hamiltonian_eff_equal(const SystemParams& p, bool check_detuning = true);
/// Zero atomic detuning; includes the two-photon |ee><gg| term.
AtomMatrix hamiltonian_eff_zero_delta(const SystemParams& p, bool check_detuning = true);

struct DetuningCheck {
  double min_detuning = 0.0;
  double max_coupling = 0.0;
  double ratio = 0.0;  ///< min_detuning / max_coupling
  bool ok = false;     ///< ratio >= 10
};

/// Compares min(|dx|,|dy|,|dz|,|dw|) against 10*max(g_i cosh r_p, g_i sinh r_p).
/// Emits a warning through diagnostics when the check fails and warn is set.
DetuningCheck large_detuning_check(const SystemParams& p, bool warn = true);

}  // namespace sqzcav
