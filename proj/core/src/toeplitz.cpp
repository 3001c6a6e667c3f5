#include "fock/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "fock/errors.hpp"
#include "fock/kernels.hpp"
#include "fock/numeric.hpp"
#include "fock/parallel.hpp"
#include "overloaded.hpp"

namespace fock {
namespace {

using detail::overloaded;

// Mass of the Gamma(a, 1) distribution on [lo, hi], taken from whichever
// tail keeps the subtraction well conditioned.
double gamma_mass(double a, double lo, double hi) {
  if (hi <= lo) return 0.0;
  if (std::isinf(hi)) return lo <= 0.0 ? 1.0 : boost::math::gamma_q(a, lo);
  const double p_hi = boost::math::gamma_p(a, hi);
  if (p_hi < 0.5) return p_hi - (lo <= 0.0 ? 0.0 : boost::math::gamma_p(a, lo));
  return (lo <= 0.0 ? 1.0 : boost::math::gamma_q(a, lo)) - boost::math::gamma_q(a, hi);
}

double piecewise_eigenvalue(const RadialProfile& f, int m, double t) {
  const double a = m + 1.0;
  const auto u = [t](double r) { return r * r / t; };
  return std::visit(
      overloaded{
          [&](const radial::Indicator& ind) { return gamma_mass(a, 0.0, u(ind.radius)); },
          [&](const radial::PiecewiseConstant& pw) {
            CompensatedSum<double> sum;
            for (std::size_t l = 0; l + 1 < pw.edges.size(); ++l) {
              sum.add(pw.values[l] * gamma_mass(a, u(pw.edges[l]), u(pw.edges[l + 1])));
            }
            sum.add(pw.tail * gamma_mass(a, u(pw.edges.back()), INFINITY));
            return sum.value();
          },
          [&](const radial::Sampled& s) {
            // f = alpha + beta r on each interval; r = sqrt(t u) turns the
            // linear part into a Gamma(m + 3/2) mass.
            const double half_ratio = std::sqrt(t) * std::exp(std::lgamma(m + 1.5) - std::lgamma(m + 1.0));
            CompensatedSum<double> sum;
            sum.add(s.values.front() * gamma_mass(a, 0.0, u(s.radii.front())));
            for (std::size_t l = 0; l + 1 < s.radii.size(); ++l) {
              const double r0 = s.radii[l], r1 = s.radii[l + 1];
              const double beta = (s.values[l + 1] - s.values[l]) / (r1 - r0);
              const double alpha = s.values[l] - beta * r0;
              sum.add(alpha * gamma_mass(a, u(r0), u(r1)));
              sum.add(beta * half_ratio * gamma_mass(a + 0.5, u(r0), u(r1)));
            }
            sum.add(s.values.back() * gamma_mass(a, u(s.radii.back()), INFINITY));
            return sum.value();
          },
          [](const auto&) -> double { throw std::logic_error("not a piecewise profile"); },
      },
      f.variant());
}

double laguerre_eigenvalue(const RadialProfile& f, int m, double t, int order) {
  const auto rule = cached_gauss_laguerre(static_cast<double>(m), order);
  CompensatedSum<double> sum;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    sum.add(rule->probability_weights[i] * f(std::sqrt(t * rule->nodes[i])));
  }
  return sum.value();
}

double smooth_eigenvalue(const RadialProfile& f, int m, double t, const RadialQuadratureOptions& opts) {
  int order = opts.base_order;
  double coarse = laguerre_eigenvalue(f, m, t, order);
  for (int k = 0; k <= opts.max_doublings; ++k) {
    const double fine = laguerre_eigenvalue(f, m, t, 2 * order);
    if (std::abs(fine - coarse) <= opts.agreement * std::max(1.0, std::abs(fine))) return fine;
    order *= 2;
    coarse = fine;
  }
  throw NumericalError("radial_eigenvalues: Laguerre quadrature did not converge for m = " + std::to_string(m));
}

}  // namespace

std::shared_ptr<const QuadratureRule> cached_gauss_laguerre(double alpha, int order) {
  static std::mutex mutex;
  static std::map<std::pair<double, int>, std::shared_ptr<const QuadratureRule>> cache;
  const auto key = std::make_pair(alpha, order);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_laguerre(alpha, order));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

EigenSequence radial_eigenvalues(const RadialProfile& f, const FockParams& p, const RadialQuadratureOptions& opts) {
  const int dim = p.dim();
  const double t = p.t();
  std::vector<double> values(static_cast<std::size_t>(dim));
  const bool exact = f.is_piecewise();
  parallel_for(values.size(), [&](std::size_t m) {
    const int mi = static_cast<int>(m);
    values[m] = exact ? piecewise_eigenvalue(f, mi, t) : smooth_eigenvalue(f, mi, t, opts);
  });
  return EigenSequence{std::move(values), p, f.kind()};
}

namespace {

// Polar-grid Toeplitz matrix from angular Fourier data F[i][n + M - 1].
ComplexMatrix polar_matrix(const std::vector<std::vector<cplx>>& fourier, const QuadratureRule& radial, int dim,
                           bool hermitian) {
  const std::size_t nodes = radial.nodes.size();
  std::vector<double> log_u(nodes), log_w(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    log_u[i] = std::log(radial.nodes[i]);
    log_w[i] = std::log(radial.probability_weights[i]);
  }
  std::vector<double> half_log_fact(static_cast<std::size_t>(dim));
  for (int m = 0; m < dim; ++m) half_log_fact[m] = 0.5 * std::lgamma(m + 1.0);

  ComplexMatrix out(dim);
  parallel_for(static_cast<std::size_t>(dim), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    for (int m = hermitian ? j : 0; m < dim; ++m) {
      CompensatedSum<cplx> sum;
      const double half_deg = 0.5 * (m + j);
      const double norm = half_log_fact[m] + half_log_fact[j];
      const std::size_t n = static_cast<std::size_t>(m - j + dim - 1);
      for (std::size_t i = 0; i < nodes; ++i) {
        const double scale = std::exp(log_w[i] + half_deg * log_u[i] - norm);
        sum.add(scale * fourier[i][n]);
      }
      out(j, m) = sum.value();
    }
  });
  if (hermitian) {
    for (int j = 0; j < dim; ++j) {
      out(j, j) = out(j, j).real();
      for (int m = j + 1; m < dim; ++m) out(m, j) = std::conj(out(j, m));
    }
  }
  out.refresh_hermitian_flag();
  return out;
}

ComplexMatrix assemble_by_quadrature(const Symbol& f, const FockParams& p, const PolarGrid& grid,
                                     const AssemblyOptions& opts) {
  const int dim = p.dim();
  const int k_coarse = grid.angles;
  const int k_fine = 2 * k_coarse;
  const auto& radial = grid.radial;
  const std::size_t nodes = radial.nodes.size();
  const std::size_t modes = static_cast<std::size_t>(2 * dim - 1);

  std::vector<cplx> cis(static_cast<std::size_t>(k_fine));
  for (int k = 0; k < k_fine; ++k) cis[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / k_fine);

  std::vector<std::vector<cplx>> coarse(nodes, std::vector<cplx>(modes));
  std::vector<std::vector<cplx>> fine;
  if (opts.check_aliasing) fine.assign(nodes, std::vector<cplx>(modes));

  parallel_for(nodes, [&](std::size_t i) {
    const double r = std::sqrt(p.t() * radial.nodes[i]);
    const int stride = opts.check_aliasing ? 1 : 2;
    std::vector<cplx> samples(static_cast<std::size_t>(k_fine));
    for (int k = 0; k < k_fine; k += stride) samples[k] = evaluate(f, r * cis[k], p);
    for (int n = -(dim - 1); n <= dim - 1; ++n) {
      CompensatedSum<cplx> even, odd;
      for (int k = 0; k < k_fine; k += stride) {
        const auto phase = cis[static_cast<std::size_t>(((static_cast<long>(n) * k) % k_fine + k_fine) % k_fine)];
        (k % 2 == 0 ? even : odd).add(samples[k] * phase);
      }
      const auto slot = static_cast<std::size_t>(n + dim - 1);
      coarse[i][slot] = even.value() / static_cast<double>(k_coarse);
      if (opts.check_aliasing) fine[i][slot] = (even.value() + odd.value()) / static_cast<double>(k_fine);
    }
  });

  const bool hermitian = is_real_valued(f);
  auto result = polar_matrix(coarse, radial, dim, hermitian);
  if (opts.check_aliasing) {
    const auto refined = polar_matrix(fine, radial, dim, hermitian);
    const double drift = max_abs_diff(result, refined);
    if (drift > opts.aliasing_tolerance) {
      throw NumericalError("assemble_general: angular grid too coarse (doubling K moved entries by " +
                           std::to_string(drift) + ")");
    }
  }
  return result;
}

}  // namespace

ComplexMatrix assemble_general(const Symbol& f, const FockParams& p, const PolarGrid& grid,
                               const AssemblyOptions& opts) {
  if (f.is<RadialProfile>()) {
    const auto eig = radial_eigenvalues(f.as<RadialProfile>(), p);
    return ComplexMatrix::diagonal(eig.values);
  }
  if (f.is<SignedAtomicMeasure>()) return assemble_measure(f.as<SignedAtomicMeasure>(), p);
  if (f.is<WeylPhase>()) return assemble_weyl_phase(f.as<WeylPhase>().z, p);
  return assemble_by_quadrature(f, p, grid, opts);
}

ComplexMatrix assemble_general(const Symbol& f, const FockParams& p) {
  if (f.is<RadialProfile>() || f.is<SignedAtomicMeasure>() || f.is<WeylPhase>()) {
    return assemble_general(f, p, make_polar_grid(1, 4));
  }
  return assemble_general(f, p, default_polar_grid(p.dim()));
}

ComplexMatrix assemble_weyl_phase(cplx z, const FockParams& p, bool unitary) {
  const int dim = p.dim();
  const double y = std::norm(z) / p.t();
  const double phi = std::arg(z);
  // T_{h_z} carries an extra e^{-y/2} on top of W_z.
  const double prefactor_log = unitary ? 0.0 : -0.5 * y;
  constexpr double kRescale = 1e200;
  const double log_rescale = std::log(kRescale);

  ComplexMatrix out(dim);
  for (int d = 0; d < dim; ++d) {
    // E_n = e^{-y/2} sqrt(n!/(n+d)!) y^{d/2} L_n^{(d)}(y), kept as scaled * e^{log_scale}.
    double log_scale = 0.0;
    double prev = 0.0, cur = 0.0;
    if (y == 0.0) {
      if (d != 0) continue;
      cur = 1.0;
    } else {
      log_scale = -0.5 * y + 0.5 * d * std::log(y) - 0.5 * std::lgamma(d + 1.0);
      cur = 1.0;
    }
    const cplx upper_phase = std::polar(1.0, -d * phi);
    const cplx lower_phase = (d % 2 == 0 ? 1.0 : -1.0) * std::polar(1.0, d * phi);
    for (int n = 0; n + d < dim; ++n) {
      if (n > 0) {
        const double next =
            n == 1 ? cur * (1.0 + d - y) / std::sqrt(1.0 + d)
                   : ((2.0 * (n - 1) + 1.0 + d - y) * cur - std::sqrt((n - 1.0) * (n - 1.0 + d)) * prev) /
                         std::sqrt(static_cast<double>(n) * (n + d));
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescale) {
          cur /= kRescale;
          prev /= kRescale;
          log_scale += log_rescale;
        }
      }
      const double value = cur * std::exp(log_scale + prefactor_log);
      out(n + d, n) = upper_phase * value;
      if (d > 0) out(n, n + d) = lower_phase * value;
    }
  }
  out.refresh_hermitian_flag();
  return out;
}

ComplexMatrix assemble_measure(const SignedAtomicMeasure& m, const FockParams& p) {
  const int dim = p.dim();
  ComplexMatrix out(dim);
  const double norm = 1.0 / (std::numbers::pi * p.t());
  for (const auto& atom : m.atoms()) {
    const auto c = normalized_kernel_coeffs(atom.position, p, dim);
    for (int j = 0; j < dim; ++j) {
      for (int col = 0; col < dim; ++col) out(j, col) += norm * atom.weight * std::conj(c[col]) * c[j];
    }
  }
  for (int j = 0; j < dim; ++j) {
    out(j, j) = out(j, j).real();
    for (int col = j + 1; col < dim; ++col) out(col, j) = std::conj(out(j, col));
  }
  out.refresh_hermitian_flag();
  return out;
}

}  // namespace fock
