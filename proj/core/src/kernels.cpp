#include "fock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fock {

cplx kernel(cplx z, cplx w, const FockParams& p) { return std::exp(w * std::conj(z) / p.t()); }

cplx normalized_kernel_coeff(int m, cplx z, const FockParams& p) {
  if (m < 0) throw std::invalid_argument("normalized_kernel_coeff: m must be >= 0");
  const double t = p.t();
  const double r = std::abs(z);
  if (r == 0.0) return m == 0 ? cplx(1.0) : cplx(0.0);
  const double log_mag =
      -r * r / (2.0 * t) + m * std::log(r) - 0.5 * (m * std::log(t) + std::lgamma(m + 1.0));
  return std::polar(std::exp(log_mag), -m * std::arg(z));
}

std::vector<cplx> normalized_kernel_coeffs(cplx z, const FockParams& p, int count) {
  std::vector<cplx> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int m = 0; m < count; ++m) out[m] = normalized_kernel_coeff(m, z, p);
  return out;
}

}  // namespace fock
