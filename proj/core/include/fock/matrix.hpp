#pragma once

#include <span>
#include <vector>

#include "fock/params.hpp"

namespace fock {

/// Dense square complex matrix, row-major. Used for truncated operators in
/// the monomial basis: entry (j, m) = <A e_m, e_j>.
class ComplexMatrix {
 public:
  /// Hermitian flag threshold on max |A - A^H|.
  static constexpr double kHermitianTolerance = 1e-12;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<cplx> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  int dim() const noexcept { return dim_; }

  cplx& operator()(int row, int col) { return data_[static_cast<std::size_t>(row) * dim_ + col]; }
  const cplx& operator()(int row, int col) const { return data_[static_cast<std::size_t>(row) * dim_ + col]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  /// True only if the last refresh found max |A - A^H| < kHermitianTolerance.
  bool hermitian() const noexcept { return hermitian_; }
  bool refresh_hermitian_flag();
  double hermitian_defect() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix leading_block(int k) const;

  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator*=(cplx s);
  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);

 private:
  int dim_ = 0;
  std::vector<cplx> data_;
  bool hermitian_ = false;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);

/// max_{j,m} |a_{jm} - b_{jm}| over the leading k x k block (k <= both dims).
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b, int k);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace fock
