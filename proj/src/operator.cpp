#include "spinlab/operator.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace spinlab {

namespace {

int spin_count_for_dim(Eigen::Index dim) {
  if (dim < 2) return -1;
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1) {
    if (d % 2 != 0) return -1;
    d /= 2;
    ++n;
  }
  return n;
}

}  // namespace

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

Operator::Operator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("Operator: matrix must be square");
  }
  n_spins_ = spin_count_for_dim(m_.rows());
  if (n_spins_ < 0) {
    throw std::invalid_argument(
        "Operator: dimension must be a power of two >= 2");
  }
}

Operator Operator::identity(int n_spins) {
  const Eigen::Index d = Eigen::Index(1) << n_spins;
  Operator op{Matrix(Matrix::Identity(d, d))};
  op.hermitian_ = true;
  op.unitary_ = true;
  return op;
}

Operator Operator::zero(int n_spins) {
  const Eigen::Index d = Eigen::Index(1) << n_spins;
  Operator op{Matrix(Matrix::Zero(d, d))};
  op.hermitian_ = true;
  return op;
}

bool Operator::is_hermitian(double tol) const {
  return max_abs(m_ - m_.adjoint()) <= tol;
}

bool Operator::is_unitary(double tol) const {
  const Matrix g = m_.adjoint() * m_ - Matrix::Identity(dim(), dim());
  return max_abs(g) <= tol;
}

Operator& Operator::flag_hermitian(double tol) {
  if (!is_hermitian(tol)) {
    throw std::invalid_argument("Operator: Hermitian flag check failed");
  }
  hermitian_ = true;
  return *this;
}

Operator& Operator::flag_unitary(double tol) {
  if (!is_unitary(tol)) {
    throw std::invalid_argument("Operator: unitary flag check failed");
  }
  unitary_ = true;
  return *this;
}

Operator Operator::adjoint() const {
  Operator out{Matrix(m_.adjoint())};
  out.hermitian_ = hermitian_;
  out.unitary_ = unitary_;
  return out;
}

Operator operator+(const Operator& a, const Operator& b) {
  return Operator{a.m_ + b.m_};
}

Operator operator-(const Operator& a, const Operator& b) {
  return Operator{a.m_ - b.m_};
}

Operator operator*(const Operator& a, const Operator& b) {
  return Operator{a.m_ * b.m_};
}

Operator operator*(Complex s, const Operator& a) { return Operator{s * a.m_}; }

Operator operator*(double s, const Operator& a) { return Operator{s * a.m_}; }

Operator Operator::operator-() const { return Operator{Matrix(-m_)}; }

Matrix2 pauli(Axis axis) {
  Matrix2 m;
  switch (axis) {
    case Axis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::Y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case Axis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

Matrix2 identity2() { return Matrix2::Identity(); }

Operator spin_operator(int spin, Axis axis, int n_spins) {
  if (n_spins < 1) {
    throw std::invalid_argument("spin_operator: need at least one spin");
  }
  if (spin < 1 || spin > n_spins) {
    throw std::out_of_range("spin_operator: spin index out of range");
  }
  Matrix acc = Matrix::Identity(1, 1);
  const Matrix2 half = 0.5 * pauli(axis);
  for (int s = 1; s <= n_spins; ++s) {
    const Matrix2 factor = (s == spin) ? half : Matrix2(identity2());
    acc = Eigen::kroneckerProduct(acc, factor).eval();
  }
  Operator op{std::move(acc)};
  op.flag_hermitian();
  return op;
}

Operator delta_block(const Matrix2& b1, const Matrix2& b2, const Matrix2& b3,
                     const Matrix2& b4) {
  Matrix m = Matrix::Zero(8, 8);
  const Matrix2* blocks[4] = {&b1, &b2, &b3, &b4};
  for (int k = 0; k < 4; ++k) {
    m.block<2, 2>(2 * k, 2 * k) = *blocks[k];
  }
  return Operator{std::move(m)};
}

Operator matrix_exponential(const Operator& h, double t) {
  if (!h.is_hermitian(1e-10)) {
    throw std::invalid_argument("matrix_exponential: generator not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("matrix_exponential: eigendecomposition failed");
  }
  const auto& vals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -vals[i] * t));
  }
  Operator out{Matrix(vecs * phases.asDiagonal() * vecs.adjoint())};
  out.flag_unitary(kPropagatorTol);
  return out;
}

double fidelity(const Operator& u, const Operator& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  if (!u.is_unitary(kPropagatorTol) || !v.is_unitary(kPropagatorTol)) {
    throw std::invalid_argument("fidelity: inputs must be unitary");
  }
  const Complex overlap = (u.matrix().adjoint() * v.matrix()).trace();
  return std::abs(overlap) / static_cast<double>(u.dim());
}

Operator conjugate(const Operator& u, const Operator& a) {
  return Operator{Matrix(u.matrix() * a.matrix() * u.matrix().adjoint())};
}

}  // namespace spinlab
