#pragma once

#include <cmath>
#include <complex>

namespace fock {

/// Neumaier-compensated accumulator. Summation order is the caller's, so a
/// fixed ascending loop gives bit-reproducible results.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    if constexpr (std::is_floating_point_v<T>) {
      step(sum_, comp_, x);
    } else {
      auto re = sum_.real(), cre = comp_.real();
      auto im = sum_.imag(), cim = comp_.imag();
      step(re, cre, x.real());
      step(im, cim, x.imag());
      sum_ = T(re, im);
      comp_ = T(cre, cim);
    }
  }

  T value() const { return sum_ + comp_; }

 private:
  template <typename R>
  static void step(R& sum, R& comp, R x) {
    const R t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  T sum_{};
  T comp_{};
};

}  // namespace fock
