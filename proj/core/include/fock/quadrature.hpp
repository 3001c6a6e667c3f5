#pragma once

#include <span>
#include <vector>

namespace fock {

/// Gauss rule for the weight u^alpha e^{-u} on (0, inf) (Laguerre) or for
/// the unit weight on [-1, 1] (Legendre, alpha unused).
///
/// `weights` integrate against the unnormalized weight (they sum to
/// Gamma(alpha + 1) for Laguerre). `probability_weights` are the same
/// weights divided by the total mass; they stay finite for large alpha where
/// Gamma(alpha + 1) overflows.
struct QuadratureRule {
  double alpha = 0.0;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> probability_weights;
};

/// Golub-Welsch: nodes and normalized weights of the Gauss rule whose Jacobi
/// matrix has the given diagonal and off-diagonal. Eigenvalues come from
/// implicit-shift QL; only the first eigenvector component is tracked.
/// Throws NumericalError if an eigenvalue needs more than 50 QL iterations.
QuadratureRule golub_welsch(std::span<const double> diagonal,
                            std::span<const double> off_diagonal,
                            double total_mass);

/// Generalized Gauss-Laguerre rule with weight u^alpha e^{-u}; exact for
/// polynomials of degree <= 2N - 1.
QuadratureRule gauss_laguerre(double alpha, int order);

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int order);

/// Radial Laguerre rule (alpha = 0, in u = r^2 / t) times K equispaced
/// angles theta_k = 2 pi k / K.
struct PolarGrid {
  QuadratureRule radial;
  int angles = 0;
};

/// K must be >= 4 and even.
PolarGrid make_polar_grid(int radial_order, int angles);

/// Default grid for an M-dimensional truncation: N = M + 64, K = 4 M
/// (at least 16).
PolarGrid default_polar_grid(int dim);

/// Smallest M with Poisson(s^2 / t) tail mass sum_{m >= M} < eps.
int truncation_dim(double s, double t, double eps);

/// Poisson(mean) mass at m and beyond, i.e. the regularized lower incomplete
/// gamma P(m, mean); 1 for m <= 0.
double poisson_tail(int m, double mean);

}  // namespace fock
