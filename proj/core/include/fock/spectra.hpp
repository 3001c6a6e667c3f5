#pragma once

#include <string>
#include <vector>

#include "fock/matrix.hpp"
#include "fock/params.hpp"
#include "fock/radial_profile.hpp"
#include "fock/symbols.hpp"
#include "fock/toeplitz.hpp"

namespace fock {

enum class Verdict { positive, not_positive, inconclusive };
enum class EssPosMode { radial, vo, limitops, symbol_liminf };

std::string to_string(Verdict v);
std::string to_string(EssPosMode m);

struct Diagnostic {
  std::string probe;
  double value = 0.0;
};

/// Essential-positivity verdict. positive implies margin >= tau,
/// not_positive implies margin <= -tau; everything else is inconclusive.
struct EssPosReport {
  Verdict verdict = Verdict::inconclusive;
  double margin = 0.0;
  EssPosMode mode = EssPosMode::radial;
  std::vector<Diagnostic> diagnostics;
  /// Set when the verdict rests on finite sampling of limit operators.
  bool heuristic = false;
};

/// positive if margin >= tau, not_positive if margin <= -tau, else inconclusive.
Verdict classify(double margin, double tau);

/// Estimated accumulation points of a sequence tail.
struct SpectrumEstimate {
  std::vector<double> points;
  double liminf = 0.0;
  double limsup = 0.0;
  int window_lo = 0;
  int window_hi = 0;
  /// Largest RMS residual of the a + b/(m+1) trend fits.
  double fit_residual = 0.0;
};

/// Clusters {lambda_m : window_frac * M <= m < M} with separation `gap`
/// (gap <= 0 selects 0.05 * (max - min + 1e-12) over the window). Clusters
/// that reach the last quartile are extrapolated with a least-squares fit
/// lambda_m ~ a + b/(m+1); the others are treated as transients and dropped.
/// Requires M >= 16.
SpectrumEstimate radial_essential_spectrum(const EigenSequence& e, double window_frac = 0.5, double gap = 0.0);

/// Verdict from the extrapolated tail liminf of the radial eigenvalues.
EssPosReport ess_positivity_radial(const RadialProfile& f, const FockParams& p, double tau = 1e-3);

/// Verdict from the Berezin transform on the outermost radius shell, valid
/// only when the symbol passes the vanishing-oscillation trend check over
/// `radii`. Non-real symbols and measures come back inconclusive.
EssPosReport ess_positivity_vo(const Symbol& s, const FockParams& p,
                               const std::vector<double>& radii = {1, 2, 4, 8, 12, 16}, double tau = 1e-3,
                               int shell_angles = 16);

/// Finite-translation stand-in for a limit operator: the Toeplitz matrix of
/// the symbol translated so that the region around rho e^{i theta} sits at
/// the origin, i.e. alpha_z(T_f) = T_{f(. - z)} with z = -rho e^{i theta}.
/// `opts` applies to quadrature-assembled samples.
ComplexMatrix limit_operator_sample(const Symbol& f, double theta, double rho, const FockParams& p,
                                    const AssemblyOptions& opts = {});

/// Options used for limit-operator samples: aliasing tolerance max(1e-7, tau/10).
AssemblyOptions limitops_assembly_options(double tau);

/// Smallest eigenvalue of the leading floor(M/2) principal block.
double min_leading_eigenvalue(const ComplexMatrix& a);

/// Samples limit operators on theta_count directions times the radius
/// tiers. positive: every outermost sample >= tau and each direction's
/// min-eigenvalues are monotone across tiers (within tau). not_positive:
/// some direction stays <= -3 tau on every tier. Always heuristic.
/// Throws std::invalid_argument for non-real symbols.
EssPosReport ess_positivity_limitops(const Symbol& f, const FockParams& p, int theta_count = 16,
                                     const std::vector<double>& radii = {4, 8, 16}, double tau = 1e-3);

/// Symbol-level liminf estimate: min of Re f over the outermost radius
/// shell (`angles` points per shell), with per-shell minima as diagnostics.
EssPosReport symbol_liminf(const Symbol& f, const FockParams& p, const std::vector<double>& radii = {8, 16, 32},
                           double tau = 1e-3, int angles = 64);

}  // namespace fock
