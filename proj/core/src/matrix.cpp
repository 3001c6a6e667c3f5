#include "fock/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fock {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
  if (dim < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
  if (dim < 0 || data_.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match dim^2");
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: entries must be finite");
    }
  }
  refresh_hermitian_flag();
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix out(dim);
  for (int i = 0; i < dim; ++i) out(i, i) = 1.0;
  out.hermitian_ = true;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix out(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<int>(i), static_cast<int>(i)) = values[i];
  out.hermitian_ = true;
  return out;
}

double ComplexMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (int j = 0; j < dim_; ++j) {
    for (int m = j; m < dim_; ++m) worst = std::max(worst, std::abs((*this)(j, m) - std::conj((*this)(m, j))));
  }
  return worst;
}

bool ComplexMatrix::refresh_hermitian_flag() {
  hermitian_ = hermitian_defect() < kHermitianTolerance;
  return hermitian_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int m = 0; m < dim_; ++m) out(m, j) = std::conj((*this)(j, m));
  }
  out.hermitian_ = hermitian_;
  return out;
}

ComplexMatrix ComplexMatrix::leading_block(int k) const {
  if (k < 0 || k > dim_) throw std::invalid_argument("leading_block: size out of range");
  ComplexMatrix out(k);
  for (int j = 0; j < k; ++j) {
    for (int m = 0; m < k; ++m) out(j, m) = (*this)(j, m);
  }
  out.hermitian_ = hermitian_;
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  if (s.imag() != 0.0) refresh_hermitian_flag();
  return *this;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  refresh_hermitian_flag();
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  refresh_hermitian_flag();
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  out.refresh_hermitian_flag();
  return out;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b, int k) {
  if (k > a.dim() || k > b.dim()) throw std::invalid_argument("max_abs_diff: block larger than matrix");
  double worst = 0.0;
  for (int j = 0; j < k; ++j) {
    for (int m = 0; m < k; ++m) worst = std::max(worst, std::abs(a(j, m) - b(j, m)));
  }
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  return max_abs_diff(a, b, a.dim());
}

}  // namespace fock
