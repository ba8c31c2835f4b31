#pragma once

// Dense operator algebra on the space of two two-level atoms and one
// truncated cavity mode.
//
// Basis ordering is atom1 (x) atom2 (x) cavity with the cavity photon number
// varying fastest. For each atom, local index 0 is |e> and index 1 is |g>, so
// sigma_z = diag(+1, -1) in the local basis.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace sqzcav {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

enum class AtomLevel : int { Excited = 0, Ground = 1 };

/// Layout of the composite space. Immutable.
class HilbertSpace {
 public:
  static constexpr int kAtoms = 2;

  explicit HilbertSpace(int n_max);

  int n_max() const noexcept { return n_max_; }
  int cavity_dim() const noexcept { return n_max_ + 1; }
  int total_dim() const noexcept { return 4 * (n_max_ + 1); }

  /// Flat basis index of |a1, a2, n>.
  int index(AtomLevel atom1, AtomLevel atom2, int photons) const;

  bool operator==(const HilbertSpace&) const = default;

 private:
  int n_max_;
};

/// A dense operator tied to the space it acts on.
class Operator {
 public:
  Operator(HilbertSpace space, Matrix matrix);

  static Operator identity(const HilbertSpace& space);
  static Operator zero(const HilbertSpace& space);

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return space_.total_dim(); }

  Operator adjoint() const;

  /// max |M - M^dagger| over all entries.
  double hermiticity_error() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_error() <= tol; }

  Vector apply(const Vector& v) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Complex s, Operator op) { return op *= s; }
  friend Operator operator*(Operator op, Complex s) { return op *= s; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

Operator commutator(const Operator& a, const Operator& b);

/// Normalised pure state.
class Ket {
 public:
  /// Throws InvalidArgument if the size is wrong or the norm deviates from 1
  /// by more than 1e-9.
  Ket(HilbertSpace space, Vector data);

  static Ket basis(const HilbertSpace& space, AtomLevel atom1, AtomLevel atom2, int photons);

  const HilbertSpace& space() const noexcept { return space_; }
  const Vector& data() const noexcept { return data_; }
  double norm() const { return data_.norm(); }

 private:
  HilbertSpace space_;
  Vector data_;
};

/// Density matrix: unit trace, Hermitian, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates trace (1e-9), Hermiticity (1e-10) and minimum eigenvalue (-1e-8).
  DensityMatrix(HilbertSpace space, Matrix data);

  static DensityMatrix pure(const Ket& ket);

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& data() const noexcept { return data_; }
  double trace() const { return data_.trace().real(); }
  double min_eigenvalue() const;

 private:
  HilbertSpace space_;
  Matrix data_;
};

enum class AtomOperatorKind { SigmaZ, SigmaPlus, SigmaMinus };

namespace local {

/// Truncated single-mode annihilation operator of dimension `dim`.
Matrix lowering(int dim);
/// 2x2 Pauli-type operators in the (|e>, |g>) basis.
Matrix pauli(AtomOperatorKind kind);
Matrix projector(AtomLevel level);
Matrix sigma_x();

}  // namespace local

/// Kronecker product of `factors` in the given order.
Matrix kron(std::span<const Matrix> factors);

/// Embeds local factors ordered atom1, atom2, cavity. Throws InvalidArgument
/// if the factor dimensions do not multiply to space.total_dim().
Operator tensor_embed(const HilbertSpace& space, std::span<const Matrix> factors);

/// Cavity annihilation operator a (x) identity on both atoms.
Operator annihilation(const HilbertSpace& space);
Operator creation(const HilbertSpace& space);
Operator number_operator(const HilbertSpace& space);

/// sigma operator on atom 1 or 2; identity elsewhere.
Operator atom_operator(const HilbertSpace& space, int atom, AtomOperatorKind kind);
/// |level><level| on the selected atom.
Operator atom_projector(const HilbertSpace& space, int atom, AtomLevel level);

struct HermitianEigensystem {
  RealVector values;  ///< ascending
  Matrix vectors;     ///< columns are eigenvectors; unitary
};

/// Eigen-decomposition of a Hermitian matrix. Rejects inputs whose
/// hermiticity error exceeds 1e-12 * max(1, max|M|).
HermitianEigensystem eig_hermitian(const Matrix& m);
HermitianEigensystem eig_hermitian(const Operator& op);

/// exp(-i * h * dt) v by a scaled Taylor series. Independent of eig_hermitian.
Vector expm_action(const Matrix& h, const Vector& v, double dt);
Ket expm_action(const Operator& op, const Ket& state, double dt);

}  // namespace sqzcav
