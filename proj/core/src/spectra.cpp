#include "fock/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fock/berezin.hpp"
#include "fock/eigen.hpp"
#include "fock/errors.hpp"
#include "fock/parallel.hpp"
#include "fock/symbol_parse.hpp"

namespace fock {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::positive: return "positive";
    case Verdict::not_positive: return "not_positive";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(EssPosMode m) {
  switch (m) {
    case EssPosMode::radial: return "radial";
    case EssPosMode::vo: return "vo";
    case EssPosMode::limitops: return "limitops";
    case EssPosMode::symbol_liminf: return "symbol_liminf";
  }
  return "radial";
}

Verdict classify(double margin, double tau) {
  if (margin >= tau) return Verdict::positive;
  if (margin <= -tau) return Verdict::not_positive;
  return Verdict::inconclusive;
}

namespace {

struct TrendFit {
  double limit = 0.0;
  double residual = 0.0;
};

// Least squares for y ~ a + b x with x = 1/(m+1).
TrendFit fit_trend(const std::vector<std::pair<int, double>>& pts) {
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [m, y] : pts) {
    mx += 1.0 / (m + 1.0);
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [m, y] : pts) {
    const double dx = 1.0 / (m + 1.0) - mx;
    sxx += dx * dx;
    sxy += dx * (y - my);
  }
  const double b = sxx > 0.0 ? sxy / sxx : 0.0;
  const double a = my - b * mx;
  double ss = 0.0;
  for (const auto& [m, y] : pts) {
    const double r = y - (a + b / (m + 1.0));
    ss += r * r;
  }
  return {a, std::sqrt(ss / n)};
}

}  // namespace

SpectrumEstimate radial_essential_spectrum(const EigenSequence& e, double window_frac, double gap) {
  const int dim = static_cast<int>(e.values.size());
  if (dim < 16) throw std::invalid_argument("radial_essential_spectrum: need at least 16 eigenvalues");
  if (!(window_frac >= 0.0 && window_frac < 1.0)) {
    throw std::invalid_argument("radial_essential_spectrum: window_frac must lie in [0, 1)");
  }
  const int lo = std::min(static_cast<int>(std::floor(window_frac * dim)), dim - 4);
  const int quartile_start = dim - dim / 4;

  std::vector<std::pair<int, double>> tail;
  for (int m = lo; m < dim; ++m) tail.emplace_back(m, e.values[m]);
  auto [min_it, max_it] = std::minmax_element(tail.begin(), tail.end(),
                                              [](const auto& a, const auto& b) { return a.second < b.second; });
  if (!(gap > 0.0)) gap = 0.05 * (max_it->second - min_it->second + 1e-12);

  auto sorted = tail;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.second < b.second; });

  SpectrumEstimate est;
  est.window_lo = lo;
  est.window_hi = dim;
  std::vector<double> reps;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i].second - sorted[i - 1].second <= gap) continue;
    std::vector<std::pair<int, double>> late;
    for (std::size_t k = start; k < i; ++k) {
      if (sorted[k].first >= quartile_start) late.push_back(sorted[k]);
    }
    start = i;
    if (late.empty()) continue;
    if (late.size() >= 3) {
      const auto fit = fit_trend(late);
      reps.push_back(fit.limit);
      est.fit_residual = std::max(est.fit_residual, fit.residual);
    } else {
      double mean = 0.0;
      for (const auto& pt : late) mean += pt.second;
      reps.push_back(mean / static_cast<double>(late.size()));
    }
  }

  std::sort(reps.begin(), reps.end());
  for (double r : reps) {
    if (!est.points.empty() && r - est.points.back() <= gap) {
      est.points.back() = 0.5 * (est.points.back() + r);
    } else {
      est.points.push_back(r);
    }
  }
  est.liminf = est.points.front();
  est.limsup = est.points.back();
  return est;
}

EssPosReport ess_positivity_radial(const RadialProfile& f, const FockParams& p, double tau) {
  const auto eig = radial_eigenvalues(f, p);
  const auto spec = radial_essential_spectrum(eig);
  EssPosReport report;
  report.mode = EssPosMode::radial;
  report.margin = spec.liminf;
  report.verdict = classify(spec.liminf, tau);
  report.diagnostics = {
      {"lambda_0", eig.values.front()},
      {"lambda_last", eig.values.back()},
      {"tail_liminf", spec.liminf},
      {"tail_limsup", spec.limsup},
      {"fit_residual", spec.fit_residual},
      {"window_lo", static_cast<double>(spec.window_lo)},
      {"cluster_count", static_cast<double>(spec.points.size())},
  };
  return report;
}

EssPosReport ess_positivity_vo(const Symbol& s, const FockParams& p, const std::vector<double>& radii, double tau,
                               int shell_angles) {
  EssPosReport report;
  report.mode = EssPosMode::vo;
  report.verdict = Verdict::inconclusive;
  if (radii.empty()) throw std::invalid_argument("ess_positivity_vo: need at least one radius");
  if (s.is<SignedAtomicMeasure>()) {
    report.diagnostics.push_back({"unsupported: atomic measure", 1.0});
    return report;
  }
  if (!is_real_valued(s)) {
    report.diagnostics.push_back({"rejected: symbol not real-valued", 1.0});
    return report;
  }

  std::vector<double> vo(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    vo[k] = vo_modulus(s, radii[k], p);
    report.diagnostics.push_back({"vo_modulus@" + format_number(radii[k]), vo[k]});
  }
  bool non_increasing = true;
  for (std::size_t k = 1; k < vo.size(); ++k) non_increasing = non_increasing && vo[k] <= vo[k - 1] + 1e-12;
  const bool vanishing = vo.back() <= 1e-12 || (non_increasing && vo.back() < 0.5 * vo.front());
  report.diagnostics.push_back({"vo_trend_pass", vanishing ? 1.0 : 0.0});
  if (!vanishing) return report;

  const bool radial = s.is<RadialProfile>();
  const int angles = radial ? 1 : shell_angles;
  std::vector<double> shell_min(radii.size(), std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    std::vector<double> values(static_cast<std::size_t>(angles));
    try {
      parallel_for(values.size(), [&](std::size_t a) {
        const cplx z = std::polar(radii[k], 2.0 * std::numbers::pi * static_cast<double>(a) / angles);
        values[a] = heat_transform_symbol(s, z, p).value.real();
      });
    } catch (const NumericalError&) {
      report.diagnostics.push_back({"heat_transform_failed@" + format_number(radii[k]), 1.0});
      return report;
    }
    shell_min[k] = *std::min_element(values.begin(), values.end());
    report.diagnostics.push_back({"berezin_shell_min@" + format_number(radii[k]), shell_min[k]});
  }
  report.margin = shell_min.back();
  report.verdict = classify(report.margin, tau);
  return report;
}

ComplexMatrix limit_operator_sample(const Symbol& f, double theta, double rho, const FockParams& p,
                                    const AssemblyOptions& opts) {
  return assemble_general(translate(f, -std::polar(rho, theta)), p, default_polar_grid(p.dim()), opts);
}

AssemblyOptions limitops_assembly_options(double tau) {
  // Translated kinks converge only algebraically; entries need to be good to
  // a fraction of tau, not to the default 1e-7.
  AssemblyOptions opts;
  opts.aliasing_tolerance = std::max(opts.aliasing_tolerance, 0.1 * tau);
  return opts;
}

double min_leading_eigenvalue(const ComplexMatrix& a) {
  const auto eig = hermitian_eigs(a.leading_block(std::max(1, a.dim() / 2)));
  return eig.front();
}

EssPosReport ess_positivity_limitops(const Symbol& f, const FockParams& p, int theta_count,
                                     const std::vector<double>& radii, double tau) {
  if (!is_real_valued(f)) throw std::invalid_argument("ess_positivity_limitops: symbol must be real-valued");
  if (theta_count < 1 || radii.empty()) throw std::invalid_argument("ess_positivity_limitops: empty sample set");

  const std::size_t tiers = radii.size();
  const std::size_t dirs = static_cast<std::size_t>(theta_count);
  std::vector<double> mins(tiers * dirs, std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> failures(tiers * dirs);
  const AssemblyOptions opts = limitops_assembly_options(tau);
  parallel_for(tiers * dirs, [&](std::size_t idx) {
    const std::size_t tier = idx / dirs, dir = idx % dirs;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(dir) / theta_count;
    try {
      mins[idx] = min_leading_eigenvalue(limit_operator_sample(f, theta, radii[tier], p, opts));
    } catch (const NumericalError& e) {
      failures[idx] = e.what();
    }
  });

  EssPosReport report;
  report.mode = EssPosMode::limitops;
  report.heuristic = true;
  report.diagnostics.push_back({"HEURISTIC: finite translations under-sample the boundary at infinity", 1.0});

  bool any_failure = false;
  for (std::size_t idx = 0; idx < mins.size(); ++idx) {
    const std::size_t tier = idx / dirs, dir = idx % dirs;
    const std::string where = "theta=" + format_number(2.0 * std::numbers::pi * static_cast<double>(dir) /
                                                       theta_count) +
                              ",rho=" + format_number(radii[tier]);
    if (!failures[idx].empty()) {
      any_failure = true;
      report.diagnostics.push_back({"assembly_failed:" + where, 1.0});
    } else {
      report.diagnostics.push_back({"min_eig:" + where, mins[idx]});
    }
  }

  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t dir = 0; dir < dirs; ++dir) {
    const double v = mins[(tiers - 1) * dirs + dir];
    if (!std::isnan(v)) margin = std::min(margin, v);
  }
  report.margin = std::isfinite(margin) ? margin : 0.0;
  if (any_failure) {
    report.verdict = Verdict::inconclusive;
    return report;
  }

  bool stable = true;
  bool persistent_negative = false;
  for (std::size_t dir = 0; dir < dirs; ++dir) {
    bool up = true, down = true, negative = true;
    for (std::size_t tier = 0; tier < tiers; ++tier) {
      const double v = mins[tier * dirs + dir];
      negative = negative && v <= -3.0 * tau;
      if (tier > 0) {
        const double prev = mins[(tier - 1) * dirs + dir];
        up = up && v >= prev - tau;
        down = down && v <= prev + tau;
      }
    }
    stable = stable && (up || down);
    persistent_negative = persistent_negative || negative;
  }
  report.diagnostics.push_back({"tier_trends_stable", stable ? 1.0 : 0.0});

  if (persistent_negative && report.margin <= -tau) {
    report.verdict = Verdict::not_positive;
  } else if (stable && report.margin >= tau) {
    report.verdict = Verdict::positive;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

EssPosReport symbol_liminf(const Symbol& f, const FockParams& p, const std::vector<double>& radii, double tau,
                           int angles) {
  if (radii.empty() || angles < 1) throw std::invalid_argument("symbol_liminf: empty sample set");
  EssPosReport report;
  report.mode = EssPosMode::symbol_liminf;
  report.heuristic = true;
  double last = 0.0;
  for (double rho : radii) {
    double lo = std::numeric_limits<double>::infinity();
    for (int a = 0; a < angles; ++a) {
      lo = std::min(lo, evaluate(f, std::polar(rho, 2.0 * std::numbers::pi * a / angles), p).real());
    }
    report.diagnostics.push_back({"symbol_shell_min@" + format_number(rho), lo});
    last = lo;
  }
  report.margin = last;
  report.verdict = classify(last, tau);
  return report;
}

}  // namespace fock
