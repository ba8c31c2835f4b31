#pragma once

// Unitary and dissipative time evolution.

#include "sqzcav/model.hpp"

#include <Eigen/SparseCore>

#include <array>
#include <functional>
#include <vector>

namespace sqzcav {

enum class BasisLabel { EG, GE, EE, GG };

const char* label_name(BasisLabel label);  // "eg", "ge", "ee", "gg"
int atom_pair_index(BasisLabel label);     // position in the two-atom basis

struct Trajectory {
  std::vector<double> times;
  /// Populations of the two-atom basis states, indexed by atom_index
  /// (ee, eg, ge, gg), summed over photon number.
  std::vector<std::array<double, 4>> atom_populations;
  /// Mean photon number of the (squeezed-frame) cavity mode.
  std::vector<double> photons;
  /// Norm for kets, trace for density matrices.
  std::vector<double> norm_or_trace;
  /// Smallest eigenvalue of rho; empty for ket runs.
  std::vector<double> min_eigenvalue;
  bool density = false;

  std::size_t size() const noexcept { return times.size(); }
  std::vector<double> population(BasisLabel label) const;
  double max_norm_drift() const;
  double min_positivity() const;  ///< +inf for ket runs
};

/// Abort thresholds and integrator tolerances for unitary runs.
struct SchrodingerOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  double max_norm_drift = 1e-6;
};

using TimeDependentMatrix = std::function<Matrix(double)>;

/// Time-independent H: exact propagation by eigendecomposition. psi0 is the
/// state at times.front(); times must be ascending.
Trajectory evolve_schrodinger(const Operator& h, const Ket& psi0, const std::vector<double>& times,
                              const SchrodingerOptions& opts = {});

/// Time-dependent H(t): adaptive Dormand-Prince 5(4) on d psi/dt = -i H(t) psi.
Trajectory evolve_schrodinger(const HilbertSpace& space, const TimeDependentMatrix& h,
                              const Ket& psi0, const std::vector<double>& times,
                              const SchrodingerOptions& opts = {});

/// Returns the final kets as well as the trajectory; used by frame checks.
struct KetTrajectory {
  Trajectory trajectory;
  std::vector<Vector> states;
};
KetTrajectory evolve_schrodinger_states(const HilbertSpace& space, const TimeDependentMatrix& h,
                                        const Ket& psi0, const std::vector<double>& times,
                                        const SchrodingerOptions& opts = {});

using AtomKet = Eigen::Vector4cd;
using TimeDependentAtomMatrix = std::function<AtomMatrix(double)>;

AtomKet atom_basis(BasisLabel label);

Trajectory evolve_effective(const AtomMatrix& h, const AtomKet& psi0,
                            const std::vector<double>& times, const SchrodingerOptions& opts = {});
Trajectory evolve_effective(const TimeDependentAtomMatrix& h, const AtomKet& psi0,
                            const std::vector<double>& times, const SchrodingerOptions& opts = {});

// ---------------------------------------------------------------------------
// Master equation
//
//   d rho/dt = i[rho, H] - 1/2 { sum_x L(L_x) rho + c_down L(L) rho + c_up L(L^dag) rho
//                               + c_cross L'(L^dag) rho + conj(c_cross) L'(L) rho }
//
//   L(O) rho  = O^dag O rho - 2 O rho O^dag + rho O^dag O
//   L'(O) rho = O O rho - 2 O rho O + rho O O
//
// with L_x = sqrt(gamma) sigma_-^x and L = sqrt(kappa) a.

enum class DissipatorVariant {
  ThermalLab,                      ///< thermal reservoir, lab-frame mode
  SqueezedFrameThermal,            ///< thermal reservoir seen from the squeezed frame (N, M)
  SqueezedReservoirLab,            ///< squeezed thermal reservoir, lab-frame mode (N', M')
  SqueezedFrameSqueezedReservoir,  ///< squeezed reservoir seen from the squeezed frame (N_s, M_s)
  MatchedLindblad,                 ///< matched drive: plain thermal form on a_s
};

const char* variant_name(DissipatorVariant v);

struct DissipatorSpec {
  DissipatorVariant variant = DissipatorVariant::MatchedLindblad;
  ReservoirParams reservoir;
  double r_p = 0.0;
  double theta_p = 0.0;
};

/// Builds a spec and checks variant/parameter consistency. MatchedLindblad
/// needs a squeezed drive with r_e = r_p and theta_e + theta_p = pi (mod 2 pi)
/// within 1e-12.
DissipatorSpec make_dissipator(DissipatorVariant variant, const ReservoirParams& reservoir,
                               const SystemParams& p);

struct CavityChannel {
  double c_down = 0.0;
  double c_up = 0.0;
  Complex c_cross{};
};

CavityChannel cavity_channel(const DissipatorSpec& spec);

class LindbladGenerator {
 public:
  LindbladGenerator(const Operator& h, const DissipatorSpec& spec);

  const HilbertSpace& space() const noexcept { return space_; }

  /// Right-hand side for a density-matrix-shaped argument.
  Matrix apply(const Matrix& rho) const;

  /// Superoperator acting on column-major vec(rho).
  Eigen::SparseMatrix<Complex> superoperator() const;

 private:
  HilbertSpace space_;
  Matrix h_;
  CavityChannel cav_;
  Matrix l_;                     // sqrt(kappa) a
  std::array<Matrix, 2> atoms_;  // sqrt(gamma) sigma_-^x
};

Matrix lindblad_rhs(const Operator& h, const DissipatorSpec& spec, const DensityMatrix& rho);

enum class MasterMethod {
  Exponential,  ///< exact propagator exp(L dt) on the reachable block
  AdaptiveRK,   ///< Dormand-Prince 5(4) on the full matrix
};

struct MasterOptions {
  MasterMethod method = MasterMethod::Exponential;
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_trace_drift = 1e-5;
  double min_eigenvalue = -1e-5;
};

/// rho0 is the state at times.front(); times must be ascending.
Trajectory evolve_master(const Operator& h, const DissipatorSpec& spec, const DensityMatrix& rho0,
                         const std::vector<double>& times, const MasterOptions& opts = {});

/// Photon-number vacuum of the squeezed mode with the atoms in the given pair state.
Ket squeezed_vacuum_state(const HilbertSpace& space, BasisLabel atoms);
/// Lab-frame cavity vacuum written in the squeezed-mode Fock basis (a squeezed
/// vacuum), truncated to the space and renormalised. Warns when the discarded
/// weight exceeds 1e-6.
Ket lab_vacuum_state(const HilbertSpace& space, BasisLabel atoms, double r_p, double theta_p);

/// Uniform grid with n points on [0, t_max].
std::vector<double> uniform_times(double t_max, int n);

}  // namespace sqzcav
