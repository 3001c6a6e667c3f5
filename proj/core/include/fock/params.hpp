#pragma once

#include <complex>
#include <stdexcept>

namespace fock {

using cplx = std::complex<double>;

/// Gaussian-weight parameter t and basis truncation M (basis e_0 ... e_{M-1}).
class FockParams {
 public:
  FockParams(double t, int dim) : t_(t), dim_(dim) {
    if (!(t > 0.0)) throw std::invalid_argument("FockParams: t must be > 0");
    if (dim < 1) throw std::invalid_argument("FockParams: dim must be >= 1");
  }

  double t() const noexcept { return t_; }
  int dim() const noexcept { return dim_; }

  FockParams with_dim(int dim) const { return FockParams(t_, dim); }

  friend bool operator==(const FockParams&, const FockParams&) = default;

 private:
  double t_;
  int dim_;
};

}  // namespace fock
