#include <gtest/gtest.h>

#include <cmath>

#include "fock/eigen.hpp"
#include "fock/errors.hpp"
#include "fock/experiments.hpp"
#include "fock/spectra.hpp"

using namespace fock;

namespace {

EigenSequence synthetic(int n, const std::function<double(int)>& f) {
  std::vector<double> v(n);
  for (int m = 0; m < n; ++m) v[m] = f(m);
  return {v, FockParams(2.0, n), "synthetic"};
}

void expect_report_invariant(const EssPosReport& r, double tau) {
  if (r.verdict == Verdict::positive) {
    EXPECT_GE(r.margin, tau);
  }
  if (r.verdict == Verdict::not_positive) {
    EXPECT_LE(r.margin, -tau);
  }
}

}  // namespace

TEST(Classify, Thresholds) {
  EXPECT_EQ(classify(1e-3, 1e-3), Verdict::positive);
  EXPECT_EQ(classify(-1e-3, 1e-3), Verdict::not_positive);
  EXPECT_EQ(classify(5e-4, 1e-3), Verdict::inconclusive);
  EXPECT_EQ(classify(0.0, 1e-3), Verdict::inconclusive);
  EXPECT_EQ(to_string(Verdict::not_positive), "not_positive");
  EXPECT_EQ(to_string(EssPosMode::limitops), "limitops");
}

TEST(EssentialSpectrum, SingleClusterExtrapolates) {
  const auto e = synthetic(200, [](int m) { return 0.25 + 3.0 / (m + 1); });
  const auto s = radial_essential_spectrum(e);
  ASSERT_EQ(s.points.size(), 1u);
  EXPECT_NEAR(s.points[0], 0.25, 1e-10);
  EXPECT_NEAR(s.liminf, 0.25, 1e-10);
  EXPECT_EQ(s.window_lo, 100);
  EXPECT_EQ(s.window_hi, 200);
}

TEST(EssentialSpectrum, AlternatingSequenceHasTwoPoints) {
  const auto e = synthetic(400, [](int m) { return (m % 2 ? -1.0 : 1.0) + 1.0 / (m + 1); });
  const auto s = radial_essential_spectrum(e);
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_NEAR(s.liminf, -1.0, 1e-3);
  EXPECT_NEAR(s.limsup, 1.0, 1e-3);
}

TEST(EssentialSpectrum, TransientClustersAreDropped) {
  // Early outliers inside the window but absent from the last quartile.
  const auto e = synthetic(200, [](int m) { return m < 120 && m % 7 == 0 ? -0.8 : 0.5; });
  const auto s = radial_essential_spectrum(e);
  ASSERT_EQ(s.points.size(), 1u);
  EXPECT_NEAR(s.points[0], 0.5, 1e-12);
}

TEST(EssentialSpectrum, RejectsTinySequences) {
  EXPECT_THROW(radial_essential_spectrum(synthetic(8, [](int) { return 1.0; })), std::invalid_argument);
}

TEST(EssPositivity, RadialVerdicts) {
  const FockParams p(2.0, 256);
  const auto rat = ess_positivity_radial(RadialProfile::rational(5, 1), p);
  EXPECT_EQ(rat.verdict, Verdict::positive);
  EXPECT_NEAR(rat.margin, 1.0, 1e-2);
  EXPECT_FALSE(rat.heuristic);
  EXPECT_EQ(ess_positivity_radial(RadialProfile::constant(-1), p).verdict, Verdict::not_positive);
  EXPECT_EQ(ess_positivity_radial(RadialProfile::constant(0), p).verdict, Verdict::inconclusive);
  EXPECT_EQ(ess_positivity_radial(RadialProfile::indicator(3), p).verdict, Verdict::inconclusive);
  EXPECT_EQ(ess_positivity_radial(RadialProfile::piecewise({0, 1}, {-1}, 0.5), p).verdict, Verdict::positive);
}

TEST(EssPositivity, ReportInvariantAcrossCatalogAndModes) {
  const double tau = 1e-3;
  for (const auto& f : radial_catalog()) {
    expect_report_invariant(ess_positivity_radial(f, FockParams(2.0, 256), tau), tau);
    expect_report_invariant(ess_positivity_vo(f, FockParams(2.0, 32), {1, 2, 4, 8, 12, 16}, tau), tau);
  }
}

TEST(EssPositivity, VoModeOnRadialAndDiscontinuousSymbols) {
  const FockParams p(2.0, 32);
  const auto rat = ess_positivity_vo(RadialProfile::rational(5, 1), p);
  EXPECT_EQ(rat.verdict, Verdict::positive);
  EXPECT_EQ(rat.mode, EssPosMode::vo);
  // A half-plane indicator oscillates at every radius, so VO does not apply.
  EXPECT_EQ(ess_positivity_vo(catalog::half_plane(0.0), p).verdict, Verdict::inconclusive);
  EXPECT_EQ(ess_positivity_vo(WeylPhase{cplx(1, 0)}, p).verdict, Verdict::inconclusive);
  EXPECT_EQ(ess_positivity_vo(SignedAtomicMeasure({{cplx(0, 0), 1.0}}), p).verdict, Verdict::inconclusive);
}

TEST(LimitOperators, WeylSpectraAreTranslationInvariant) {
  const FockParams p(2.0, 32);
  const Symbol h = WeylPhase{cplx(1.0, 0.5)};
  const auto ref = singular_values(assemble_general(h, p));
  for (double rho : {4.0, 8.0}) {
    for (double theta : {0.0, 2.0}) {
      const auto sv = singular_values(limit_operator_sample(h, theta, rho, p));
      for (std::size_t i = 0; i < sv.size(); ++i) EXPECT_NEAR(sv[i], ref[i], 1e-8);
    }
  }
}

TEST(LimitOperators, SampleProbesTheRequestedRegion) {
  // Around -8 the directional symbol is close to -8/9.
  const FockParams p(2.0, 16);
  const AssemblyOptions loose{.check_aliasing = true, .aliasing_tolerance = 1e-4};
  const auto a = limit_operator_sample(catalog::directional(), M_PI, 8.0, p, loose);
  EXPECT_NEAR(a(0, 0).real(), -8.0 / 9.0, 0.02);
  EXPECT_GT(limit_operator_sample(catalog::directional(), 0.0, 8.0, p, loose)(0, 0).real(), 0.85);
  EXPECT_THROW(limit_operator_sample(catalog::directional(), M_PI, 8.0, p), NumericalError);
}

TEST(LimitOperators, VerdictsAndGuards) {
  const FockParams p(2.0, 24);
  const auto pos = ess_positivity_limitops(RadialProfile::constant(0.5), p, 4, {4, 8});
  EXPECT_EQ(pos.verdict, Verdict::positive);
  EXPECT_TRUE(pos.heuristic);
  EXPECT_EQ(ess_positivity_limitops(RadialProfile::constant(-0.5), p, 4, {4, 8}).verdict, Verdict::not_positive);
  EXPECT_THROW(ess_positivity_limitops(WeylPhase{cplx(1, 0)}, p), std::invalid_argument);
}

TEST(SymbolLiminf, ShellMinima) {
  const FockParams p(2.0, 8);
  const auto dir = symbol_liminf(catalog::directional(), p);
  EXPECT_NEAR(dir.margin, -32.0 / 33.0, 1e-12);
  EXPECT_EQ(dir.verdict, Verdict::not_positive);
  EXPECT_EQ(dir.mode, EssPosMode::symbol_liminf);
  const auto rat = symbol_liminf(RadialProfile::rational(5, 1), p);
  EXPECT_EQ(rat.verdict, Verdict::positive);
}

TEST(MinLeadingEigenvalue, UsesPrincipalHalfBlock) {
  const std::vector<double> d{5.0, 4.0, 3.0, -7.0};
  EXPECT_EQ(min_leading_eigenvalue(ComplexMatrix::diagonal(d)), 4.0);
}
