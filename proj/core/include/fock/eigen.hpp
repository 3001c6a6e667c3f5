#pragma once

#include <vector>

#include "fock/matrix.hpp"

namespace fock {

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
/// rotations. Stops once the off-diagonal Frobenius norm drops below
/// 1e-12 * ||A||_F. Throws std::invalid_argument when the Hermitian flag is
/// not set and NumericalError after 30 sweeps.
std::vector<double> hermitian_eigs(const ComplexMatrix& a);

/// Singular values, ascending: sqrt of hermitian_eigs(A^H A), clamped at 0.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Singular values of the M x k column block A[:, 0:k], i.e. of A restricted
/// to span(e_0 .. e_{k-1}) with the full range kept.
std::vector<double> column_block_singular_values(const ComplexMatrix& a, int k);

/// A^H A.
ComplexMatrix gram(const ComplexMatrix& a);

}  // namespace fock
