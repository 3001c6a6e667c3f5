#pragma once

#include <string>
#include <vector>

#include "fock/params.hpp"
#include "fock/radial_profile.hpp"
#include "fock/spectra.hpp"
#include "fock/symbols.hpp"

namespace fock {

/// One |z| of the Weyl-phase family h_z: essential norm against Berezin size.
struct RatioRow {
  double absz = 0.0;
  /// e^{-|z|^2/2t}.
  double ess_norm_exact = 0.0;
  /// Median singular value of the leading M/2 column block of T_{h_z}.
  double ess_norm_numeric = 0.0;
  /// max over the w-grid of |Berezin(T_{h_z})(w)|.
  double berezin_sup = 0.0;
  double ratio = 0.0;
  /// e^{-3|z|^2/2t}, the exponent quoted in the source literature, carried
  /// for comparison with the computed berezin_sup (which follows e^{-|z|^2/t}).
  double berezin_literature = 0.0;
};

/// Rows for z = |z| on the positive real axis. The Berezin transform is
/// sampled on radii {0, 0.5, 1, 2, 3, 4} x 8 angles.
std::vector<RatioRow> counterexample_table(double t, const std::vector<double>& radii, int dim);

struct RatioObjective {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  /// Denominator below 1e-14: value is +inf.
  bool degenerate = false;
  /// Numerator below 1e-14: the profile looks compact at the probed scale.
  bool numerator_negligible = false;
  int dim_used = 0;
};

inline const std::vector<double>& default_s_grid() {
  static const std::vector<double> grid{1.0, 2.0, 4.0, 8.0, 16.0};
  return grid;
}

/// R(f) = max_{m in [window_frac M, M)} |lambda_m| / max_{s in s_grid} |B(s)|.
/// Eigenvalues are computed up to max(M, truncation_dim(max s, t, 1e-10)) so
/// the Berezin series is not truncated.
RatioObjective ratio_objective(const RadialProfile& f, const FockParams& p,
                               const std::vector<double>& s_grid = default_s_grid(), double window_frac = 0.5);

struct VoDemoRow {
  std::string profile;
  EssPosReport radial;
  EssPosReport vo;
  bool agree = false;
};

/// Radial-eigenvalue verdict next to the Berezin (VO) verdict per profile.
std::vector<VoDemoRow> vo_corollary_demo(const std::vector<RadialProfile>& profiles, const FockParams& p,
                                         double tau = 1e-3);

/// Bounded radial profiles exercised by the consistency suites.
std::vector<RadialProfile> radial_catalog();

/// Real-valued function symbols (radial and non-radial) for limit-operator checks.
std::vector<Symbol> real_symbol_catalog();

struct ConsistencyRow {
  std::string symbol;
  std::string check;
  Verdict verdict = Verdict::inconclusive;
  double estimate = 0.0;
  bool pass = false;
};

/// Two implications, checked over the catalogs:
///  - radial verdict positive  =>  Berezin limsup estimate >= -tau;
///  - symbol liminf >= -tau    =>  limit-operator mode is not not_positive.
std::vector<ConsistencyRow> consistency_suite(const FockParams& radial_params, const FockParams& limitops_params,
                                              double tau = 1e-3);

struct SelfTestResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Fast invariant checks used by `fockscope selftest`.
std::vector<SelfTestResult> run_selftest();

}  // namespace fock
