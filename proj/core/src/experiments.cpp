#include "fock/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fock/berezin.hpp"
#include "fock/eigen.hpp"
#include "fock/kernels.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbol_parse.hpp"
#include "fock/toeplitz.hpp"

namespace fock {

std::vector<RatioRow> counterexample_table(double t, const std::vector<double>& radii, int dim) {
  const FockParams p(t, dim);
  static constexpr double kGridRadii[] = {0.0, 0.5, 1.0, 2.0, 3.0, 4.0};
  constexpr int kGridAngles = 8;

  std::vector<RatioRow> rows;
  for (double absz : radii) {
    if (absz < 0.0) throw std::invalid_argument("counterexample_table: radii must be >= 0");
    const auto a = assemble_weyl_phase(cplx(absz, 0.0), p);

    auto sv = column_block_singular_values(a, std::max(1, dim / 2));
    std::sort(sv.begin(), sv.end());
    const std::size_t n = sv.size();
    const double median = n % 2 ? sv[n / 2] : 0.5 * (sv[n / 2 - 1] + sv[n / 2]);

    double sup = 0.0;
    for (double rw : kGridRadii) {
      for (int k = 0; k < kGridAngles; ++k) {
        const cplx w = std::polar(rw, 2.0 * std::numbers::pi * k / kGridAngles);
        sup = std::max(sup, std::abs(berezin_from_matrix(a, w, p).value));
      }
    }

    RatioRow row;
    row.absz = absz;
    row.ess_norm_exact = std::exp(-absz * absz / (2.0 * t));
    row.ess_norm_numeric = median;
    row.berezin_sup = sup;
    row.ratio = row.ess_norm_exact / sup;
    row.berezin_literature = std::exp(-1.5 * absz * absz / t);
    rows.push_back(row);
  }
  return rows;
}

RatioObjective ratio_objective(const RadialProfile& f, const FockParams& p, const std::vector<double>& s_grid,
                               double window_frac) {
  if (s_grid.empty()) throw std::invalid_argument("ratio_objective: empty s grid");
  if (!(window_frac >= 0.0 && window_frac < 1.0)) throw std::invalid_argument("ratio_objective: bad window");
  const double s_max = *std::max_element(s_grid.begin(), s_grid.end());
  const int dim = std::max(p.dim(), truncation_dim(s_max, p.t(), 1e-10));
  const auto eig = radial_eigenvalues(f, p.with_dim(dim));

  RatioObjective out;
  out.dim_used = dim;
  const int lo = static_cast<int>(std::floor(window_frac * p.dim()));
  for (int m = lo; m < p.dim(); ++m) out.numerator = std::max(out.numerator, std::abs(eig.values[m]));
  for (double s : s_grid) out.denominator = std::max(out.denominator, std::abs(radial_berezin_series(eig, s).value));

  out.numerator_negligible = out.numerator < 1e-14;
  if (out.denominator < 1e-14) {
    out.degenerate = true;
    out.value = std::numeric_limits<double>::infinity();
  } else {
    out.value = out.numerator / out.denominator;
  }
  return out;
}

std::vector<VoDemoRow> vo_corollary_demo(const std::vector<RadialProfile>& profiles, const FockParams& p,
                                         double tau) {
  std::vector<VoDemoRow> rows;
  for (const auto& f : profiles) {
    VoDemoRow row;
    row.profile = print_symbol(f);
    row.radial = ess_positivity_radial(f, p, tau);
    row.vo = ess_positivity_vo(f, p, {1, 2, 4, 8, 12, 16}, tau);
    row.agree = row.radial.verdict == row.vo.verdict;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RadialProfile> radial_catalog() {
  return {
      RadialProfile::constant(0.5),
      RadialProfile::constant(-1.0),
      RadialProfile::constant(0.0),
      RadialProfile::indicator(1.0),
      RadialProfile::piecewise({0.0, 1.0, 2.0}, {-1.0, 0.5}, 0.0),
      RadialProfile::piecewise({0.0, 1.5, 3.0}, {-1.0, -0.5}, 0.75),
      RadialProfile::rational(5.0, 1.0),
      RadialProfile::rational(5.0, 1.0, -1.0),
      RadialProfile::sampled({0.0, 1.0, 2.0, 4.0}, {1.0, -0.5, 0.25, 0.5}),
  };
}

std::vector<Symbol> real_symbol_catalog() {
  std::vector<Symbol> out;
  for (auto& f : radial_catalog()) out.emplace_back(std::move(f));
  out.push_back(catalog::directional());
  out.push_back(catalog::half_plane(0.0));
  out.push_back(translate(RadialProfile::rational(5.0, 1.0), cplx(1.0, 1.0)));
  return out;
}

std::vector<ConsistencyRow> consistency_suite(const FockParams& radial_params, const FockParams& limitops_params,
                                              double tau) {
  std::vector<ConsistencyRow> rows;
  const std::vector<double> far_radii{8.0, 12.0, 16.0};
  const int dim = std::max(radial_params.dim(), truncation_dim(far_radii.back(), radial_params.t(), 1e-10));

  for (const auto& f : radial_catalog()) {
    const auto report = ess_positivity_radial(f, radial_params, tau);
    const auto eig = radial_eigenvalues(f, radial_params.with_dim(dim));
    double limsup = -std::numeric_limits<double>::infinity();
    for (double s : far_radii) limsup = std::max(limsup, radial_berezin_series(eig, s).value.real());
    ConsistencyRow row;
    row.symbol = print_symbol(f);
    row.check = "positive => berezin limsup >= -tau";
    row.verdict = report.verdict;
    row.estimate = limsup;
    row.pass = report.verdict != Verdict::positive || limsup >= -tau;
    rows.push_back(std::move(row));
  }

  for (const auto& s : real_symbol_catalog()) {
    const auto liminf = symbol_liminf(s, limitops_params, {8.0, 16.0, 32.0}, tau);
    ConsistencyRow row;
    row.symbol = print_symbol(s);
    row.check = "symbol liminf >= -tau => limitops not not_positive";
    row.estimate = liminf.margin;
    if (liminf.margin < -tau) {
      row.verdict = Verdict::inconclusive;
      row.pass = true;
      row.check += " (premise false, skipped)";
    } else {
      const auto report = ess_positivity_limitops(s, limitops_params, 16, {4.0, 8.0, 16.0}, tau);
      row.verdict = report.verdict;
      row.pass = report.verdict != Verdict::not_positive;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

SelfTestResult check(std::string name, bool pass, double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return {std::move(name), pass, os.str()};
}

}  // namespace

std::vector<SelfTestResult> run_selftest() {
  std::vector<SelfTestResult> out;
  const FockParams p(2.0, 40);

  {
    // x^19 against Gamma(alpha + 20).
    const auto rule = gauss_laguerre(2.0, 10);
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * std::pow(rule.nodes[i], 19);
    const double exact = std::exp(std::lgamma(22.0));
    const double rel = std::abs(q - exact) / exact;
    out.push_back(check("gauss_laguerre exact to degree 2N-1", rel < 1e-9, rel));
  }
  {
    double norm = 0.0;
    for (const auto& c : normalized_kernel_coeffs(cplx(1.0, 1.0), p, 40)) norm += std::norm(c);
    out.push_back(check("normalized kernel has unit norm", std::abs(norm - 1.0) < 1e-12, std::abs(norm - 1.0)));
  }
  {
    const Symbol one = GeneralSymbol{[](cplx) { return cplx(1.0); }, 1.0, true, "one"};
    const auto a = assemble_general(one, p.with_dim(16));
    const double err = max_abs_diff(a, ComplexMatrix::identity(16));
    out.push_back(check("T_1 is the identity", err < 1e-10, err));
  }
  {
    const FockParams q(2.0, 60);
    const auto u = assemble_weyl_phase(cplx(1.0, 0.5), q, true);
    const double err = max_abs_diff(gram(u), ComplexMatrix::identity(60), 30);
    out.push_back(check("Weyl operator unitary on leading block", err < 1e-8, err));
  }
  {
    const auto e = radial_eigenvalues(RadialProfile::power(2), p);
    double err = 0.0;
    for (int m = 0; m < p.dim(); ++m) err = std::max(err, std::abs(e.values[m] - 2.0 * (m + 1)) / (2.0 * (m + 1)));
    out.push_back(check("radial eigenvalues of r^2", err < 1e-8, err));
  }
  {
    const auto f = RadialProfile::rational(5.0, 1.0);
    const auto e = radial_eigenvalues(f, p.with_dim(80));
    const double series = radial_berezin_series(e, 2.0).value.real();
    const double heat = heat_transform_symbol(f, cplx(2.0, 0.0), p).value.real();
    out.push_back(check("Berezin series equals heat transform", std::abs(series - heat) < 1e-6,
                        std::abs(series - heat)));
  }
  {
    ComplexMatrix a(3);
    a(0, 0) = 2.0;
    a(1, 1) = -1.0;
    a(2, 2) = 0.5;
    a(0, 1) = cplx(0.0, 1.0);
    a(1, 0) = cplx(0.0, -1.0);
    a.refresh_hermitian_flag();
    const auto eig = hermitian_eigs(a);
    const double trace = eig[0] + eig[1] + eig[2];
    out.push_back(check("Jacobi preserves the trace", std::abs(trace - 1.5) < 1e-12, trace));
  }
  {
    const Symbol s = catalog::directional();
    const auto twice = translate(translate(s, cplx(0.3, 0.1)), cplx(-1.0, 0.7));
    const auto once = translate(s, cplx(-0.7, 0.8));
    double err = 0.0;
    for (int k = 0; k < 16; ++k) {
      const cplx w(0.5 * k - 4.0, 0.25 * k);
      err = std::max(err, std::abs(evaluate(twice, w, p) - evaluate(once, w, p)));
    }
    out.push_back(check("translations compose", err < 1e-12, err));
  }
  {
    bool ok = true;
    for (const auto& s : real_symbol_catalog()) ok = ok && print_symbol(parse_symbol(print_symbol(s))) == print_symbol(s);
    out.push_back(check("symbol text round-trips", ok, ok ? 1.0 : 0.0));
  }
  {
    const auto r = ratio_objective(RadialProfile::constant(0.7), FockParams(2.0, 64));
    out.push_back(check("ratio objective of a constant is 1", std::abs(r.value - 1.0) < 1e-12,
                        std::abs(r.value - 1.0)));
  }
  return out;
}

}  // namespace fock
