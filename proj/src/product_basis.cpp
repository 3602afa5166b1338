#include "spinlab/product_basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace spinlab {

namespace {

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X:
      return 'x';
    case Axis::Y:
      return 'y';
    case Axis::Z:
      return 'z';
  }
  return '?';
}

std::string spin_letter(int spin, int n_spins) {
  static const char* kLetters[3] = {"I", "S", "R"};
  if (n_spins <= 3 && spin >= 1 && spin <= 3) return kLetters[spin - 1];
  return "q" + std::to_string(spin);
}

int axis_rank(Axis a) { return static_cast<int>(a); }

// Rendered matrices of every basis term, built once per spin count.
struct BasisTable {
  std::vector<ProductTerm> terms;
  std::vector<Matrix> matrices;
  std::map<ProductTerm, std::size_t> index;
};

const BasisTable& basis_table(int n_spins) {
  static std::mutex mutex;
  static std::map<int, BasisTable> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n_spins);
  if (it != tables.end()) return it->second;

  if (n_spins < 1 || n_spins > 8) {
    throw std::invalid_argument("product_basis: supported for 1..8 spins");
  }
  BasisTable table;
  const std::size_t count = std::size_t(1) << (2 * n_spins);  // 4^n
  table.terms.reserve(count);
  // Enumerate factor assignments spin -> {none, x, y, z}.
  for (std::size_t code = 0; code < count; ++code) {
    ProductTerm term;
    std::size_t c = code;
    for (int spin = n_spins; spin >= 1; --spin) {
      const int a = static_cast<int>(c % 4);
      c /= 4;
      if (a > 0) term = term.with(spin, static_cast<Axis>(a - 1));
    }
    table.terms.push_back(term);
  }
  std::sort(table.terms.begin(), table.terms.end());
  table.matrices.reserve(count);
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    table.matrices.push_back(product_operator(table.terms[i], n_spins).matrix());
    table.index.emplace(table.terms[i], i);
  }
  return tables.emplace(n_spins, std::move(table)).first->second;
}

}  // namespace

ProductTerm::ProductTerm(std::initializer_list<std::pair<int, Axis>> factors) {
  for (const auto& [spin, axis] : factors) {
    if (spin < 1) throw std::invalid_argument("ProductTerm: spin index >= 1");
    factors_[spin] = axis;
  }
}

ProductTerm ProductTerm::single(int spin, Axis axis) {
  return ProductTerm{{spin, axis}};
}

ProductTerm ProductTerm::with(int spin, Axis axis) const {
  if (spin < 1) throw std::invalid_argument("ProductTerm: spin index >= 1");
  ProductTerm out = *this;
  out.factors_[spin] = axis;
  return out;
}

double ProductTerm::normalization() const {
  if (is_identity()) return 1.0;
  return std::pow(2.0, factor_count() - 1);
}

std::string ProductTerm::label(int n_spins) const {
  if (is_identity()) return "E";
  std::string out;
  const double norm = normalization();
  if (norm != 1.0) out += std::to_string(static_cast<long>(norm));
  for (const auto& [spin, axis] : factors_) {
    out += spin_letter(spin, n_spins);
    out += axis_letter(axis);
  }
  return out;
}

bool ProductTerm::operator<(const ProductTerm& other) const {
  if (factor_count() != other.factor_count()) {
    return factor_count() < other.factor_count();
  }
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  for (; a != factors_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return axis_rank(a->second) < axis_rank(b->second);
  }
  return false;
}

const std::vector<ProductTerm>& product_basis(int n_spins) {
  return basis_table(n_spins).terms;
}

Operator product_operator(const ProductTerm& term, int n_spins) {
  if (!term.factors().empty() && term.factors().rbegin()->first > n_spins) {
    throw std::out_of_range("product_operator: factor spin exceeds spin count");
  }
  Matrix acc = Matrix::Identity(1, 1);
  for (int spin = 1; spin <= n_spins; ++spin) {
    Matrix2 factor = identity2();
    auto it = term.factors().find(spin);
    if (it != term.factors().end()) factor = 0.5 * pauli(it->second);
    acc = Eigen::kroneckerProduct(acc, factor).eval();
  }
  Operator op{Matrix(term.normalization() * acc)};
  op.flag_hermitian();
  return op;
}

double term_self_trace(const ProductTerm& term, int n_spins) {
  if (term.is_identity()) return std::pow(2.0, n_spins);
  return std::pow(2.0, n_spins - 2);
}

BasisExpansion::BasisExpansion(int n_spins, std::vector<Complex> coefficients)
    : n_spins_(n_spins), coeffs_(std::move(coefficients)) {
  const std::size_t expected = std::size_t(1) << (2 * n_spins);
  if (coeffs_.size() != expected) {
    throw std::invalid_argument("BasisExpansion: wrong coefficient count");
  }
}

Complex BasisExpansion::coefficient(const ProductTerm& term) const {
  const auto& table = basis_table(n_spins_);
  auto it = table.index.find(term);
  if (it == table.index.end()) {
    throw std::out_of_range("BasisExpansion: unknown basis term");
  }
  return coeffs_[it->second];
}

double BasisExpansion::real_coefficient(const ProductTerm& term) const {
  const Complex c = coefficient(term);
  if (std::abs(c.imag()) > kAlgebraTol) {
    throw std::runtime_error(
        "BasisExpansion: coefficient has a non-vanishing imaginary part");
  }
  return c.real();
}

double BasisExpansion::max_imaginary() const {
  double worst = 0.0;
  for (const Complex& c : coeffs_) worst = std::max(worst, std::abs(c.imag()));
  return worst;
}

Operator BasisExpansion::reconstruct() const {
  const auto& table = basis_table(n_spins_);
  const Eigen::Index d = Eigen::Index(1) << n_spins_;
  Matrix acc = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != Complex(0, 0)) acc += coeffs_[i] * table.matrices[i];
  }
  return Operator{std::move(acc)};
}

std::vector<std::pair<ProductTerm, double>> BasisExpansion::significant_real(
    double tol) const {
  const auto& table = basis_table(n_spins_);
  std::vector<std::pair<ProductTerm, double>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (std::abs(coeffs_[i].real()) > tol) {
      out.emplace_back(table.terms[i], coeffs_[i].real());
    }
  }
  return out;
}

std::string BasisExpansion::render(double tol) const {
  const auto entries = significant_real(tol);
  if (entries.empty()) return "0";
  std::string out;
  for (const auto& [term, value] : entries) {
    if (!out.empty()) out += ' ';
    out += value < 0 ? '-' : '+';
    const double mag = std::abs(value);
    if (std::abs(mag - 1.0) > 1e-6) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6g", mag);
      out += buf;
    }
    out += term.label(n_spins_);
  }
  return out;
}

BasisExpansion expand(const Operator& a) {
  const int n = a.spin_count();
  const auto& table = basis_table(n);
  std::vector<Complex> coeffs(table.terms.size());
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    // tr(B A) with B Hermitian: sum_ij conj(B_ij) A_ij.
    const Complex tr = (table.matrices[i].conjugate().cwiseProduct(a.matrix())).sum();
    coeffs[i] = tr / term_self_trace(table.terms[i], n);
  }
  return BasisExpansion(n, std::move(coeffs));
}

}  // namespace spinlab
