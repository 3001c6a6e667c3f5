#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fock/matrix.hpp"
#include "fock/params.hpp"
#include "fock/quadrature.hpp"
#include "fock/radial_profile.hpp"
#include "fock/symbols.hpp"

namespace fock {

/// Diagonal lambda_0 ... lambda_{M-1} of a radial Toeplitz operator in the
/// monomial basis.
struct EigenSequence {
  std::vector<double> values;
  FockParams params;
  std::string profile_tag;
};

struct RadialQuadratureOptions {
  int base_order = 96;
  /// Each m is accepted once the N- and 2N-node rules agree to this
  /// (relative to max(1, |lambda_m|)).
  double agreement = 1e-8;
  int max_doublings = 3;
};

/// lambda_m(f) = (1/m!) int_0^inf f(sqrt(t u)) u^m e^{-u} du.
///
/// Smooth profiles use generalized Gauss-Laguerre rules with alpha = m and
/// an N vs 2N agreement check (NumericalError when it never agrees).
/// Indicator, piecewise-constant and sampled profiles are summed exactly
/// from regularized incomplete gamma functions on each smooth piece.
EigenSequence radial_eigenvalues(const RadialProfile& f, const FockParams& p,
                                 const RadialQuadratureOptions& opts = {});

/// Shared, immutable Laguerre rule for (alpha, order); thread-safe.
std::shared_ptr<const QuadratureRule> cached_gauss_laguerre(double alpha, int order);

struct AssemblyOptions {
  /// Re-evaluate with 2K angles and fail when entries move by more than
  /// `aliasing_tolerance`.
  bool check_aliasing = true;
  double aliasing_tolerance = 1e-7;
};

/// Truncated Toeplitz matrix A_{jm} = <T_f e_m, e_j>.
///
/// Radial symbols take the diagonal fast path, measures go to
/// assemble_measure, Weyl phases to assemble_weyl_phase. Everything else is
/// integrated on the polar grid (Laguerre nodes in u = r^2/t, trapezoid in
/// angle, one angular DFT per radial node). Real-valued symbols give an exactly Hermitian matrix.
ComplexMatrix assemble_general(const Symbol& f, const FockParams& p, const PolarGrid& grid,
                               const AssemblyOptions& opts = {});

/// Same, with default_polar_grid(p.dim()).
ComplexMatrix assemble_general(const Symbol& f, const FockParams& p);

/// Exact matrix of T_{h_z} = e^{-|z|^2/2t} W_z (or of W_z itself when
/// `unitary` is set). Entries come from the normalized Laguerre three-term
/// recurrence along each diagonal, which stays accurate where the explicit
/// binomial double sum cancels catastrophically.
ComplexMatrix assemble_weyl_phase(cplx z, const FockParams& p, bool unitary = false);

/// A_{jm} = (1/(pi t)) sum_i w_i e^{-|p_i|^2/t} p_i^m conj(p_i)^j / sqrt(t^{m+j} m! j!).
ComplexMatrix assemble_measure(const SignedAtomicMeasure& m, const FockParams& p);

}  // namespace fock
