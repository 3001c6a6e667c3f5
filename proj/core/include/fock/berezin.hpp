#pragma once

#include "fock/matrix.hpp"
#include "fock/params.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbols.hpp"
#include "fock/toeplitz.hpp"

namespace fock {

/// A Berezin value with the size of what was left out. `tail_bound` is the
/// neglected Poisson tail mass times a norm estimate; `truncation_warning`
/// is raised when truncation_dim(|z|, t, 1e-10) exceeds the available dim.
struct BerezinValue {
  cplx value;
  double tail_bound = 0.0;
  bool truncation_warning = false;
};

/// <A k_z, k_z> = sum_{j,m < M} A_{jm} c_m(z) conj(c_j(z)).
/// The norm estimate in the tail bound is the Frobenius norm of A.
BerezinValue berezin_from_matrix(const ComplexMatrix& a, cplx z, const FockParams& p);

/// Heat transform (1/(pi t)) int f(w) e^{-|z-w|^2/t} dw.
///
/// Radial symbols reduce to the 1D integral
///   (2/t) int_0^inf f(r) e^{-(r-s)^2/t} I0~(2rs/t) r dr,   s = |z|,
/// with I0~(x) = I0(x) e^{-x}, integrated by composite Gauss-Legendre
/// panels that respect the profile's breakpoints. Other symbols use a polar
/// grid centred at z (half-step angle offset). `tail_bound` holds the
/// difference to a refined evaluation; NumericalError when it exceeds 1e-7.
/// Measures are forwarded to heat_transform_measure.
BerezinValue heat_transform_symbol(const Symbol& f, cplx z, const FockParams& p, const PolarGrid& grid);
BerezinValue heat_transform_symbol(const Symbol& f, cplx z, const FockParams& p);

/// (1/(pi t)) sum_i w_i e^{-|z - p_i|^2/t}.
double heat_transform_measure(const SignedAtomicMeasure& m, cplx z, const FockParams& p);

/// B(s) = e^{-s^2/t} sum_{m<M} lambda_m (s^2/t)^m / m!, the Poisson average of
/// the eigenvalues. tail_bound = max|lambda| * Poisson tail mass beyond M.
BerezinValue radial_berezin_series(const EigenSequence& e, double s);

}  // namespace fock
