#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fock/radial_profile.hpp"
#include "fock/toeplitz.hpp"
#include "oracles.hpp"

using namespace fock;
using oracle::ld;

TEST(RadialProfile, EvaluatesEachKind) {
  EXPECT_EQ(RadialProfile::constant(0.3)(5.0), 0.3);
  EXPECT_EQ(RadialProfile::power(4)(2.0), 16.0);
  EXPECT_EQ(RadialProfile::indicator(1.0)(1.0), 1.0);
  EXPECT_EQ(RadialProfile::indicator(1.0)(1.0 + 1e-12), 0.0);
  const auto pw = RadialProfile::piecewise({0.0, 1.0, 2.0}, {-1.0, 0.5}, 0.25);
  EXPECT_EQ(pw(0.5), -1.0);
  EXPECT_EQ(pw(1.0), 0.5);
  EXPECT_EQ(pw(7.0), 0.25);
  EXPECT_NEAR(RadialProfile::rational(5.0, 1.0)(2.0), -1.0 / 5.0, 1e-16);
  EXPECT_NEAR(RadialProfile::rational(5.0, 1.0, -1.0)(0.0), 5.0, 1e-16);
  const auto s = RadialProfile::sampled({0.0, 1.0, 3.0}, {1.0, -1.0, 0.0});
  EXPECT_NEAR(s(0.5), 0.0, 1e-16);
  EXPECT_NEAR(s(2.0), -0.5, 1e-16);
  EXPECT_EQ(s(10.0), 0.0);
}

TEST(RadialProfile, PiecewiseValuesAreClamped) {
  const auto pw = RadialProfile::piecewise({0.0, 1.0}, {3.0}, -2.0);
  EXPECT_EQ(pw(0.5), 1.0);
  EXPECT_EQ(pw(5.0), -1.0);
  EXPECT_EQ(pw.sup_norm(), 1.0);
}

TEST(RadialProfile, RejectsInvalidInput) {
  EXPECT_THROW(RadialProfile::power(3), std::invalid_argument);
  EXPECT_THROW(RadialProfile::indicator(-1.0), std::invalid_argument);
  EXPECT_THROW(RadialProfile::piecewise({0.0, 2.0, 1.0}, {0.0, 0.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(RadialProfile::piecewise({0.5, 1.0}, {0.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(RadialProfile::rational(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(RadialProfile::sampled({0.0, 1.0}, {1.0}), std::invalid_argument);
}

TEST(RadialProfile, SupNormAndLimits) {
  EXPECT_TRUE(std::isinf(RadialProfile::power(2).sup_norm()));
  EXPECT_EQ(RadialProfile::power(0).sup_norm(), 1.0);
  EXPECT_NEAR(RadialProfile::rational(5.0, 1.0).sup_norm(), 5.0, 1e-15);
  EXPECT_FALSE(RadialProfile::power(2).limit_at_infinity().has_value());
  EXPECT_EQ(*RadialProfile::rational(5.0, 1.0, -2.0).limit_at_infinity(), -2.0);
  EXPECT_EQ(*RadialProfile::indicator(3.0).limit_at_infinity(), 0.0);
}

TEST(RadialEigenvalues, ConstantIsExact) {
  for (double t : {1.0, 2.0}) {
    const auto e = radial_eigenvalues(RadialProfile::constant(1.0), FockParams(t, 101));
    for (double v : e.values) EXPECT_NEAR(v, 1.0, 1e-10);
  }
}

TEST(RadialEigenvalues, EvenPowersMatchFactorialRatio) {
  for (double t : {0.5, 2.0}) {
    for (int k : {2, 4, 6}) {
      const auto e = radial_eigenvalues(RadialProfile::power(k), FockParams(t, 61));
      for (int m = 0; m <= 60; ++m) {
        // t^{k/2} (m+1)(m+2)...(m+k/2)
        ld ref = std::pow(static_cast<ld>(t), k / 2);
        for (int i = 1; i <= k / 2; ++i) ref *= m + i;
        EXPECT_NEAR(e.values[m] / static_cast<double>(ref), 1.0, 1e-8) << "k=" << k << " m=" << m;
      }
    }
  }
}

TEST(RadialEigenvalues, IndicatorIsAPoissonTail) {
  const double t = 2.0, r = 1.7;
  const auto e = radial_eigenvalues(RadialProfile::indicator(r), FockParams(t, 40));
  for (int m = 0; m < 40; ++m) {
    // (1/m!) int_0^{R^2/t} u^m e^{-u} du = P(Poisson(R^2/t) >= m+1)
    const double ref = static_cast<double>(oracle::poisson_upper_direct(m + 1, r * r / t));
    EXPECT_NEAR(e.values[m], ref, 1e-14 + 1e-10 * ref) << m;
  }
}

TEST(RadialEigenvalues, SmoothAndPiecewiseProfilesMatchBruteForce) {
  const double t = 2.0;
  struct Case {
    RadialProfile f;
    std::function<ld(ld)> g;
    std::vector<ld> cuts;
  };
  std::vector<Case> cases{
      {RadialProfile::rational(5.0, 1.0), [](ld r) { return (r * r - 5) / (r * r + 1); }, {}},
      {RadialProfile::rational(2.0, 3.0, -0.5), [](ld r) { return -0.5L * (r * r - 2) / (r * r + 3); }, {}},
      {RadialProfile::piecewise({0.0, 1.0, 2.5}, {-1.0, 0.5}, 0.25),
       [](ld r) { return r < 1 ? -1.0L : (r < 2.5L ? 0.5L : 0.25L); },
       {1.0L, 2.5L}},
      {RadialProfile::sampled({0.0, 1.0, 2.0, 4.0}, {1.0, -0.5, 0.25, 0.5}),
       [](ld r) {
         if (r < 1) return 1.0L - 1.5L * r;
         if (r < 2) return -0.5L + 0.75L * (r - 1);
         if (r < 4) return 0.25L + 0.125L * (r - 2);
         return 0.5L;
       },
       {1.0L, 2.0L, 4.0L}},
  };
  for (const auto& c : cases) {
    const auto e = radial_eigenvalues(c.f, FockParams(t, 30));
    for (int m : {0, 1, 2, 5, 11, 29}) {
      const double ref = static_cast<double>(oracle::radial_eigenvalue(c.g, m, t, c.cuts));
      EXPECT_NEAR(e.values[m], ref, 1e-9) << c.f.kind() << " m=" << m;
    }
  }
}

TEST(RadialEigenvalues, BoundedProfilesStayWithinSupNorm) {
  // Each eigenvalue is an average of f against a probability density.
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> edges{0.0}, values;
    for (int i = 0; i < 6; ++i) {
      edges.push_back(edges.back() + 0.3 + std::abs(u(gen)));
      values.push_back(u(gen));
    }
    const auto f = RadialProfile::piecewise(edges, values, u(gen));
    const auto e = radial_eigenvalues(f, FockParams(2.0, 80));
    for (double v : e.values) EXPECT_LE(std::abs(v), f.sup_norm() + 1e-12);
  }
}

TEST(RadialEigenvalues, RationalHasNegativeHeadAndPositiveLimit) {
  const auto e = radial_eigenvalues(RadialProfile::rational(5.0, 1.0), FockParams(2.0, 200));
  EXPECT_LT(e.values[0], 0.0);
  EXPECT_GT(e.values[199], 0.9);
  EXPECT_EQ(e.profile_tag, "rational");
}
