#include "fock/berezin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fock/errors.hpp"
#include "fock/kernels.hpp"
#include "fock/numeric.hpp"

namespace fock {
namespace {

constexpr double kTruncationEps = 1e-10;
constexpr double kRefinementTolerance = 1e-7;

// I0(x) e^{-x}, x >= 0.
double scaled_bessel_i0(double x) {
  if (x < 600.0) return std::cyl_bessel_i(0.0, x) * std::exp(-x);
  // Hankel asymptotic series; terms below 1e-17 at x >= 600.
  const double inv = 1.0 / (8.0 * x);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= (2.0 * k - 1.0) * (2.0 * k - 1.0) * inv / k;
    sum += term;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

const QuadratureRule& legendre20() {
  static const QuadratureRule rule = gauss_legendre(20);
  return rule;
}

double radial_heat(const RadialProfile& f, double s, double t, double panel_width) {
  const double reach = 14.0 * std::sqrt(t);
  const double lo = std::max(0.0, s - reach);
  const double hi = s + reach;
  std::vector<double> cuts{lo};
  for (double b : f.breakpoints()) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);

  const auto& gl = legendre20();
  CompensatedSum<double> sum;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double a = cuts[c], b = cuts[c + 1];
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
    const double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
      const double mid = a + (k + 0.5) * h;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double r = mid + 0.5 * h * gl.nodes[i];
        const double kernel = std::exp(-(r - s) * (r - s) / t) * scaled_bessel_i0(2.0 * r * s / t);
        sum.add(0.5 * h * gl.weights[i] * (2.0 / t) * f(r) * r * kernel);
      }
    }
  }
  return sum.value();
}

cplx centred_polar(const Symbol& f, cplx z, const FockParams& p, const QuadratureRule& radial, int angles) {
  CompensatedSum<cplx> sum;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = std::sqrt(p.t() * radial.nodes[i]);
    CompensatedSum<cplx> ring;
    for (int k = 0; k < angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * (k + 0.5) / angles;
      ring.add(evaluate(f, z + std::polar(r, theta), p));
    }
    sum.add(radial.probability_weights[i] * ring.value() / static_cast<double>(angles));
  }
  return sum.value();
}

}  // namespace

BerezinValue berezin_from_matrix(const ComplexMatrix& a, cplx z, const FockParams& p) {
  const int dim = a.dim();
  const auto c = normalized_kernel_coeffs(z, p, dim);
  CompensatedSum<cplx> sum;
  for (int j = 0; j < dim; ++j) {
    CompensatedSum<cplx> row;
    for (int m = 0; m < dim; ++m) row.add(a(j, m) * c[m]);
    sum.add(row.value() * std::conj(c[j]));
  }
  const double tail = poisson_tail(dim, std::norm(z) / p.t());
  const double norm_estimate = a.frobenius_norm();
  return BerezinValue{sum.value(), norm_estimate * (2.0 * std::sqrt(tail) + tail),
                      truncation_dim(std::abs(z), p.t(), kTruncationEps) > dim};
}

BerezinValue heat_transform_symbol(const Symbol& f, cplx z, const FockParams& p, const PolarGrid& grid) {
  if (f.is<SignedAtomicMeasure>()) return {heat_transform_measure(f.as<SignedAtomicMeasure>(), z, p), 0.0, false};

  cplx coarse, fine;
  if (f.is<RadialProfile>()) {
    const auto& profile = f.as<RadialProfile>();
    const double width = 0.5 * std::sqrt(p.t());
    coarse = radial_heat(profile, std::abs(z), p.t(), width);
    fine = radial_heat(profile, std::abs(z), p.t(), 0.5 * width);
  } else {
    coarse = centred_polar(f, z, p, grid.radial, grid.angles);
    const auto refined = cached_gauss_laguerre(0.0, 2 * grid.radial.order);
    fine = centred_polar(f, z, p, *refined, 2 * grid.angles);
  }
  const double drift = std::abs(fine - coarse);
  if (drift > kRefinementTolerance) {
    throw NumericalError("heat_transform_symbol: grid refinement moved the value by " + std::to_string(drift));
  }
  return BerezinValue{fine, drift, false};
}

BerezinValue heat_transform_symbol(const Symbol& f, cplx z, const FockParams& p) {
  static const PolarGrid grid = make_polar_grid(96, 128);
  return heat_transform_symbol(f, z, p, grid);
}

double heat_transform_measure(const SignedAtomicMeasure& m, cplx z, const FockParams& p) {
  CompensatedSum<double> sum;
  for (const auto& a : m.atoms()) sum.add(a.weight * std::exp(-std::norm(z - a.position) / p.t()));
  return sum.value() / (std::numbers::pi * p.t());
}

BerezinValue radial_berezin_series(const EigenSequence& e, double s) {
  const double t = e.params.t();
  const double mean = s * s / t;
  const int dim = static_cast<int>(e.values.size());
  if (dim == 0) throw std::invalid_argument("radial_berezin_series: empty eigenvalue sequence");
  double sup = 0.0;
  for (double v : e.values) sup = std::max(sup, std::abs(v));
  if (mean == 0.0) return BerezinValue{e.values.front(), 0.0, false};

  const double log_mean = std::log(mean);
  CompensatedSum<double> sum;
  for (int m = 0; m < dim; ++m) {
    const double weight = std::exp(-mean + m * log_mean - std::lgamma(m + 1.0));
    sum.add(e.values[m] * weight);
  }
  return BerezinValue{sum.value(), sup * poisson_tail(dim, mean),
                      truncation_dim(s, t, kTruncationEps) > dim};
}

}  // namespace fock
