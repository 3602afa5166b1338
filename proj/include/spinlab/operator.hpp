#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector = Eigen::VectorXcd;

// Tolerances for the algebraic identities maintained by this module.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kPropagatorTol = 1e-8;

enum class Axis { X, Y, Z };

/// Largest absolute entry of a matrix.
double max_abs(const Matrix& m);

/// Dense complex operator over n coupled spin-1/2 nuclei, dim = 2^n.
///
/// An Operator is an immutable value apart from its Hermitian/unitary
/// flags, which may be attached only after the corresponding numerical
/// invariant has been checked (see flag_hermitian / flag_unitary).
class Operator {
 public:
  Operator() = default;

  /// Wraps a square matrix whose dimension must be a power of two.
  explicit Operator(Matrix m);

  static Operator identity(int n_spins);
  static Operator zero(int n_spins);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int spin_count() const { return n_spins_; }

  bool is_hermitian(double tol = kHermitianTol) const;
  bool is_unitary(double tol = kUnitaryTol) const;

  /// Checks ||A - A'||_max <= tol and records the flag; throws otherwise.
  Operator& flag_hermitian(double tol = kHermitianTol);
  /// Checks ||U'U - 1||_max <= tol and records the flag; throws otherwise.
  Operator& flag_unitary(double tol = kUnitaryTol);

  bool flagged_hermitian() const { return hermitian_; }
  bool flagged_unitary() const { return unitary_; }

  Operator adjoint() const;
  Complex trace() const { return m_.trace(); }

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);
  friend Operator operator*(double s, const Operator& a);
  Operator operator-() const;

 private:
  Matrix m_;
  int n_spins_ = 0;
  bool hermitian_ = false;
  bool unitary_ = false;
};

/// 2x2 Pauli matrix for the given axis (eigenvalues +-1).
Matrix2 pauli(Axis axis);

/// 2x2 identity.
Matrix2 identity2();

/// Single-spin angular-momentum operator (half Pauli) embedded into an
/// n-spin register with identities on the other spins. Spin indices are
/// 1-based; spin 1 is the most significant qubit of the basis ordering
/// |i j k ...> with |0> the m = +1/2 state.
Operator spin_operator(int spin, Axis axis, int n_spins);

/// Block-diagonal 8x8 operator from four 2x2 blocks. Block m = 1..4 acts
/// on the third-spin subspace with the first two spins fixed to
/// (i,j) = (0,0), (0,1), (1,0), (1,1) in that order.
Operator delta_block(const Matrix2& b1, const Matrix2& b2, const Matrix2& b3,
                     const Matrix2& b4);

/// exp(-i H t) for a Hermitian generator, computed by eigendecomposition
/// so the result is unitary up to rounding. Throws on non-Hermitian input.
Operator matrix_exponential(const Operator& h, double t);

/// |tr(U'V)| / dim for unitary U, V: 1 exactly when U and V agree up to a
/// global phase. Throws on dimension mismatch or non-unitary input.
double fidelity(const Operator& u, const Operator& v);

/// U A U' for unitary U.
Operator conjugate(const Operator& u, const Operator& a);

}  // namespace spinlab
