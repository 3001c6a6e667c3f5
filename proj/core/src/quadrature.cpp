#include "fock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "fock/errors.hpp"

namespace fock {
namespace {

constexpr int kMaxQlIterations = 50;

// Implicit-shift QL on a symmetric tridiagonal matrix. `d` is overwritten
// with eigenvalues, `first` with the first components of the eigenvectors.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& first) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  e.resize(n, 0.0);
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == kMaxQlIterations) {
        throw NumericalError("tridiagonal QL did not converge for eigenvalue " + std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = first[i + 1];
        first[i + 1] = s * first[i] + c * f;
        first[i] = c * first[i] - s * f;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

QuadratureRule golub_welsch(std::span<const double> diagonal,
                            std::span<const double> off_diagonal,
                            double total_mass) {
  const auto n = diagonal.size();
  if (n == 0) throw std::invalid_argument("golub_welsch: empty Jacobi matrix");
  if (off_diagonal.size() + 1 < n) throw std::invalid_argument("golub_welsch: off-diagonal too short");

  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(off_diagonal.begin(), off_diagonal.begin() + static_cast<std::ptrdiff_t>(n - 1));
  std::vector<double> first(n, 0.0);
  first[0] = 1.0;
  tridiagonal_ql(d, e, first);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return d[a] < d[b]; });

  QuadratureRule rule;
  rule.order = static_cast<int>(n);
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  rule.probability_weights.reserve(n);
  for (auto idx : order) {
    const double pw = first[idx] * first[idx];
    rule.nodes.push_back(d[idx]);
    rule.probability_weights.push_back(pw);
    rule.weights.push_back(pw * total_mass);
  }
  return rule;
}

QuadratureRule gauss_laguerre(double alpha, int order) {
  if (order < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("gauss_laguerre: alpha must be >= 0");

  std::vector<double> diag(order), off(order);
  for (int i = 0; i < order; ++i) {
    diag[i] = 2.0 * i + 1.0 + alpha;
    off[i] = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
  }
  auto rule = golub_welsch(diag, off, std::exp(std::lgamma(alpha + 1.0)));
  rule.alpha = alpha;
  return rule;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  std::vector<double> diag(order, 0.0), off(order);
  for (int i = 0; i < order; ++i) {
    const double k = i + 1.0;
    off[i] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  return golub_welsch(diag, off, 2.0);
}

PolarGrid make_polar_grid(int radial_order, int angles) {
  if (angles < 4 || angles % 2 != 0) {
    throw std::invalid_argument("PolarGrid: angle count must be even and >= 4");
  }
  return PolarGrid{gauss_laguerre(0.0, radial_order), angles};
}

PolarGrid default_polar_grid(int dim) {
  return make_polar_grid(dim + 64, std::max(16, 4 * dim));
}

double poisson_tail(int m, double mean) {
  if (m <= 0) return 1.0;
  if (mean <= 0.0) return 0.0;
  return boost::math::gamma_p(static_cast<double>(m), mean);
}

int truncation_dim(double s, double t, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("truncation_dim: eps must lie in (0, 1)");
  if (!(t > 0.0)) throw std::invalid_argument("truncation_dim: t must be > 0");
  const double mean = s * s / t;
  int m = 1;
  while (poisson_tail(m, mean) >= eps) ++m;
  return m;
}

}  // namespace fock
