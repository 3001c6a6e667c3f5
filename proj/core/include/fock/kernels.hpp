#pragma once

#include <vector>

#include "fock/params.hpp"

namespace fock {

/// Reproducing kernel K_z(w) = exp(w conj(z) / t).
cplx kernel(cplx z, cplx w, const FockParams& p);

/// c_m(z) = <k_z, e_m> = exp(-|z|^2 / 2t) conj(z)^m / sqrt(t^m m!),
/// the coefficients of the normalized kernel in the monomial basis
/// e_m(w) = w^m / sqrt(t^m m!). Evaluated in log-magnitude / phase form.
cplx normalized_kernel_coeff(int m, cplx z, const FockParams& p);

/// c_0(z) ... c_{count-1}(z).
std::vector<cplx> normalized_kernel_coeffs(cplx z, const FockParams& p, int count);

}  // namespace fock
