#include "sqzcav/fock_algebra.hpp"

#include "sqzcav/errors.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <string>

namespace sqzcav {

HilbertSpace::HilbertSpace(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1, got " + std::to_string(n_max));
}

int HilbertSpace::index(AtomLevel atom1, AtomLevel atom2, int photons) const {
  if (photons < 0 || photons > n_max_)
    throw InvalidArgument("photon number " + std::to_string(photons) + " outside [0, n_max]");
  const int atoms = 2 * static_cast<int>(atom1) + static_cast<int>(atom2);
  return atoms * cavity_dim() + photons;
}

Operator::Operator(HilbertSpace space, Matrix matrix) : space_(space), matrix_(std::move(matrix)) {
  const int d = space_.total_dim();
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw InvalidArgument("operator shape " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " does not match total_dim " +
                          std::to_string(d));
}

Operator Operator::identity(const HilbertSpace& space) {
  return {space, Matrix::Identity(space.total_dim(), space.total_dim())};
}

Operator Operator::zero(const HilbertSpace& space) {
  return {space, Matrix::Zero(space.total_dim(), space.total_dim())};
}

Operator Operator::adjoint() const { return {space_, matrix_.adjoint()}; }

double Operator::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

Vector Operator::apply(const Vector& v) const {
  if (v.size() != dim()) throw InvalidArgument("vector size does not match operator");
  return matrix_ * v;
}

static void require_same_space(const Operator& a, const Operator& b) {
  if (!(a.space() == b.space())) throw InvalidArgument("operators live on different spaces");
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_space(*this, rhs);
  matrix_ += rhs.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_space(*this, rhs);
  matrix_ -= rhs.matrix_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_space(lhs, rhs);
  return {lhs.space(), lhs.matrix() * rhs.matrix()};
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Ket::Ket(HilbertSpace space, Vector data) : space_(space), data_(std::move(data)) {
  if (data_.size() != space_.total_dim()) throw InvalidArgument("ket size does not match space");
  if (std::abs(data_.norm() - 1.0) > 1e-9)
    throw InvalidArgument("ket is not normalised (norm " + std::to_string(data_.norm()) + ")");
}

Ket Ket::basis(const HilbertSpace& space, AtomLevel atom1, AtomLevel atom2, int photons) {
  Vector v = Vector::Zero(space.total_dim());
  v(space.index(atom1, atom2, photons)) = 1.0;
  return {space, std::move(v)};
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix data)
    : space_(space), data_(std::move(data)) {
  const int d = space_.total_dim();
  if (data_.rows() != d || data_.cols() != d)
    throw InvalidArgument("density matrix shape does not match space");
  if (std::abs(data_.trace().real() - 1.0) > 1e-9 || std::abs(data_.trace().imag()) > 1e-9)
    throw InvalidArgument("density matrix trace is not 1");
  if ((data_ - data_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("density matrix is not Hermitian");
  if (min_eigenvalue() < -1e-8) throw InvalidArgument("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const Ket& ket) {
  return {ket.space(), ket.data() * ket.data().adjoint()};
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(data_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

namespace local {

Matrix lowering(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix pauli(AtomOperatorKind kind) {
  Matrix m = Matrix::Zero(2, 2);
  switch (kind) {
    case AtomOperatorKind::SigmaZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case AtomOperatorKind::SigmaPlus:  // |e><g|
      m(0, 1) = 1.0;
      break;
    case AtomOperatorKind::SigmaMinus:  // |g><e|
      m(1, 0) = 1.0;
      break;
  }
  return m;
}

Matrix projector(AtomLevel level) {
  Matrix m = Matrix::Zero(2, 2);
  const int i = static_cast<int>(level);
  m(i, i) = 1.0;
  return m;
}

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

}  // namespace local

Matrix kron(std::span<const Matrix> factors) {
  if (factors.empty()) return Matrix::Identity(1, 1);
  Matrix out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Matrix& b = factors[k];
    Matrix next(out.rows() * b.rows(), out.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = out(i, j) * b;
    out = std::move(next);
  }
  return out;
}

Operator tensor_embed(const HilbertSpace& space, std::span<const Matrix> factors) {
  Eigen::Index rows = 1, cols = 1;
  for (const auto& f : factors) {
    rows *= f.rows();
    cols *= f.cols();
  }
  if (rows != space.total_dim() || cols != space.total_dim())
    throw InvalidArgument("tensor_embed: factor dimensions multiply to " + std::to_string(rows) +
                          "x" + std::to_string(cols) + ", expected " +
                          std::to_string(space.total_dim()));
  return {space, kron(factors)};
}

namespace {

Operator embed3(const HilbertSpace& space, Matrix a1, Matrix a2, Matrix cav) {
  const std::array<Matrix, 3> f{std::move(a1), std::move(a2), std::move(cav)};
  return tensor_embed(space, f);
}

void check_atom(int atom) {
  if (atom != 1 && atom != 2)
    throw InvalidArgument("atom index must be 1 or 2, got " + std::to_string(atom));
}

}  // namespace

Operator annihilation(const HilbertSpace& space) {
  return embed3(space, Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                local::lowering(space.cavity_dim()));
}

Operator creation(const HilbertSpace& space) { return annihilation(space).adjoint(); }

Operator number_operator(const HilbertSpace& space) {
  const Operator a = annihilation(space);
  return a.adjoint() * a;
}

Operator atom_operator(const HilbertSpace& space, int atom, AtomOperatorKind kind) {
  check_atom(atom);
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix idc = Matrix::Identity(space.cavity_dim(), space.cavity_dim());
  const Matrix s = local::pauli(kind);
  return atom == 1 ? embed3(space, s, id2, idc) : embed3(space, id2, s, idc);
}

Operator atom_projector(const HilbertSpace& space, int atom, AtomLevel level) {
  check_atom(atom);
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix idc = Matrix::Identity(space.cavity_dim(), space.cavity_dim());
  const Matrix p = local::projector(level);
  return atom == 1 ? embed3(space, p, id2, idc) : embed3(space, id2, p, idc);
}

HermitianEigensystem eig_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("eig_hermitian: matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double herr = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herr > 1e-12 * scale)
    throw InvalidArgument("eig_hermitian: input is not Hermitian (error " + std::to_string(herr) +
                          ")");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) throw NumericalDiagnostic("eig_hermitian: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

HermitianEigensystem eig_hermitian(const Operator& op) { return eig_hermitian(op.matrix()); }

Vector expm_action(const Matrix& h, const Vector& v, double dt) {
  if (h.rows() != v.size()) throw InvalidArgument("expm_action: size mismatch");
  if (dt == 0.0) return v;
  // 1-norm bound; split so each substep has |h dt / s| <= 0.5
  double norm1 = 0.0;
  for (Eigen::Index j = 0; j < h.cols(); ++j) norm1 = std::max(norm1, h.col(j).cwiseAbs().sum());
  const double theta = norm1 * std::abs(dt);
  const int steps = std::max(1, static_cast<int>(std::ceil(theta / 0.5)));
  const Complex factor = -kI * (dt / steps);

  Vector out = v;
  for (int s = 0; s < steps; ++s) {
    Vector term = out;
    Vector acc = out;
    for (int k = 1; k < 60; ++k) {
      term = (factor / static_cast<double>(k)) * (h * term);
      acc += term;
      if (term.norm() <= 1e-17 * acc.norm()) break;
    }
    out = std::move(acc);
  }
  return out;
}

Ket expm_action(const Operator& op, const Ket& state, double dt) {
  if (!(op.space() == state.space())) throw InvalidArgument("expm_action: space mismatch");
  Vector out = expm_action(op.matrix(), state.data(), dt);
  const double n = out.norm();
  if (std::abs(n - 1.0) > 1e-10)
    throw NumericalDiagnostic("expm_action: norm drift " + std::to_string(n - 1.0));
  return {state.space(), std::move(out)};
}

}  // namespace sqzcav
