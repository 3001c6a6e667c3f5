#include "fock/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fock/errors.hpp"

namespace fock {
namespace {

constexpr int kMaxSweeps = 30;
constexpr double kRelativeOffTolerance = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p, q) with J = D R: D puts e^{-i phi} on q so the pivot turns
// real, R is the classical real Jacobi rotation. A <- J^H A J.
void rotate(ComplexMatrix& a, int p, int q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double tan_rot = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + tan_rot * tan_rot);
  const double s = tan_rot * c;
  const int n = a.dim();

  // Columns: new_p = c a_p - s e^{-i phi} a_q, new_q = s a_p + c e^{-i phi} a_q.
  const cplx conj_phase = std::conj(phase);
  for (int k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * conj_phase * akq;
    a(k, q) = s * akp + c * conj_phase * akq;
  }
  // Rows: new_p = c a_p - s e^{i phi} a_q, new_q = s a_p + c e^{i phi} a_q.
  for (int k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - tan_rot * mag;
  a(q, q) = aqq + tan_rot * mag;
}

}  // namespace

std::vector<double> hermitian_eigs(const ComplexMatrix& a) {
  if (!a.hermitian()) throw std::invalid_argument("hermitian_eigs: matrix is not flagged Hermitian");
  ComplexMatrix work = a;
  const int n = work.dim();
  const double scale = a.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(work) > kRelativeOffTolerance * scale) {
    if (++sweep > kMaxSweeps) throw NumericalError("hermitian_eigs: Jacobi sweep limit exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) rotate(work, p, q);
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[i] = work(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
    }
  }
  for (int i = 0; i < n; ++i) {
    g(i, i) = g(i, i).real();
    for (int j = i + 1; j < n; ++j) g(j, i) = std::conj(g(i, j));
  }
  g.refresh_hermitian_flag();
  return g;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  return column_block_singular_values(a, a.dim());
}

std::vector<double> column_block_singular_values(const ComplexMatrix& a, int k) {
  if (k < 0 || k > a.dim()) throw std::invalid_argument("column block size out of range");
  auto eig = hermitian_eigs(gram(a).leading_block(k));
  for (auto& v : eig) v = std::sqrt(std::max(v, 0.0));
  return eig;
}

}  // namespace fock
