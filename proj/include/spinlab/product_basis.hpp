#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinlab/operator.hpp"

namespace spinlab {

/// One element of the normalized product-operator basis: a set of
/// single-spin factors (spin index -> axis), rendered as the matrix
/// 2^(q-1) * prod(embedded half-Pauli factors) where q is the factor
/// count. The empty factor set denotes the identity term, rendered as
/// the identity matrix.
class ProductTerm {
 public:
  ProductTerm() = default;
  ProductTerm(std::initializer_list<std::pair<int, Axis>> factors);

  static ProductTerm single(int spin, Axis axis);

  /// Returns a copy extended by one factor; replaces any existing factor
  /// on the same spin.
  ProductTerm with(int spin, Axis axis) const;

  bool is_identity() const { return factors_.empty(); }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const std::map<int, Axis>& factors() const { return factors_; }

  /// 2^(q-1) for q factors; 1 for the identity term.
  double normalization() const;

  /// Canonical text form: "E", "Ix", "2IxSz", "4IySzRx". Spins are
  /// lettered I, S, R for n <= 3 and q1, q2, ... otherwise.
  std::string label(int n_spins = 3) const;

  bool operator==(const ProductTerm& other) const = default;
  /// Canonical order: ascending factor count, then spin indices, then
  /// axis (x < y < z).
  bool operator<(const ProductTerm& other) const;

 private:
  std::map<int, Axis> factors_;
};

/// All 4^n basis terms in canonical order (identity first).
const std::vector<ProductTerm>& product_basis(int n_spins);

/// Matrix of a normalized product-operator term over n spins.
Operator product_operator(const ProductTerm& term, int n_spins);

/// tr(B^2) of a normalized basis term: 2^n for the identity term,
/// 2^(n-2) otherwise.
double term_self_trace(const ProductTerm& term, int n_spins);

/// Coefficients of an operator over the full product basis,
/// c_B = tr(B A) / tr(B^2). Coefficients are stored complex; for
/// Hermitian inputs the imaginary parts vanish within kAlgebraTol.
class BasisExpansion {
 public:
  BasisExpansion(int n_spins, std::vector<Complex> coefficients);

  int spin_count() const { return n_spins_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  Complex coefficient(const ProductTerm& term) const;
  /// Real part of a coefficient; throws if the imaginary part exceeds
  /// kAlgebraTol.
  double real_coefficient(const ProductTerm& term) const;

  double max_imaginary() const;

  /// Sum of c_B * B over the basis.
  Operator reconstruct() const;

  /// Terms with |Re c| > tol, in canonical order.
  std::vector<std::pair<ProductTerm, double>> significant_real(
      double tol = 1e-9) const;

  /// Signed rendering in canonical term order, e.g.
  /// "+Ix +Sx -Rx +2IxSx -2IxRx -2SxRx -4IxSxRx".
  std::string render(double tol = 1e-9) const;

 private:
  int n_spins_ = 0;
  std::vector<Complex> coeffs_;
};

/// Expands an operator in the normalized product-operator basis.
/// Reconstruction of the result matches the input within kAlgebraTol.
BasisExpansion expand(const Operator& a);

}  // namespace spinlab
