#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "fock/errors.hpp"
#include "fock/quadrature.hpp"
#include "oracles.hpp"

using namespace fock;

TEST(GaussLaguerre, IntegratesMonomialsExactlyUpToDegree2NMinus1) {
  for (double alpha : {0.0, 0.5, 3.0, 17.0}) {
    const int n = 12;
    const auto rule = gauss_laguerre(alpha, n);
    ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n; ++k) {
      long double q = 0.0L;
      for (int i = 0; i < n; ++i) q += rule.weights[i] * std::pow(static_cast<long double>(rule.nodes[i]), k);
      const long double exact = std::exp(std::lgamma(static_cast<long double>(alpha) + k + 1));
      EXPECT_NEAR(static_cast<double>(q / exact), 1.0, 1e-10) << "alpha=" << alpha << " k=" << k;
    }
  }
}

TEST(GaussLaguerre, NodesSortedPositiveAndProbabilityWeightsSumToOne) {
  const auto rule = gauss_laguerre(40.0, 96);
  EXPECT_TRUE(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
  EXPECT_GT(rule.nodes.front(), 0.0);
  const double total = std::accumulate(rule.probability_weights.begin(), rule.probability_weights.end(), 0.0);
  EXPECT_NEAR(total, 1.0, 1e-13);
  for (double w : rule.weights) EXPECT_GE(w, 0.0);
}

TEST(GaussLaguerre, RejectsBadArguments) {
  EXPECT_THROW(gauss_laguerre(-1.0, 4), std::invalid_argument);
  EXPECT_THROW(gauss_laguerre(0.0, 0), std::invalid_argument);
}

TEST(GaussLegendre, IntegratesPolynomials) {
  const auto rule = gauss_legendre(10);
  for (int k = 0; k < 20; ++k) {
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(q, exact, 1e-14) << k;
  }
}

TEST(GolubWelsch, MatchesKnownTwoPointHermiteRule) {
  // Hermite: diag 0, offdiag sqrt(1/2), mass sqrt(pi) -> nodes +-1/sqrt(2).
  const std::vector<double> diag{0.0, 0.0};
  const std::vector<double> off{std::sqrt(0.5)};
  const auto rule = golub_welsch(diag, off, std::sqrt(M_PI));
  EXPECT_NEAR(rule.nodes[0], -std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(rule.nodes[1], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(rule.weights[0], std::sqrt(M_PI) / 2, 1e-15);
}

TEST(PolarGrid, DefaultSizesAndValidation) {
  const auto g = default_polar_grid(20);
  EXPECT_EQ(g.radial.nodes.size(), 84u);
  EXPECT_EQ(g.angles, 80);
  EXPECT_EQ(default_polar_grid(2).angles, 16);
  EXPECT_THROW(make_polar_grid(8, 7), std::invalid_argument);
  EXPECT_THROW(make_polar_grid(8, 2), std::invalid_argument);
}

TEST(PoissonTail, MatchesPmfSumOracle) {
  for (double mean : {0.5, 2.0, 8.0, 40.0}) {
    for (int m : {0, 1, 3, 10, 30, 60}) {
      const double lib = poisson_tail(m, mean);
      const double ref = static_cast<double>(oracle::poisson_upper_direct(m, mean));
      if (m == 0) {
        EXPECT_DOUBLE_EQ(lib, 1.0);
      } else {
        EXPECT_NEAR(lib, ref, 1e-14 + 1e-10 * ref) << m << " " << mean;
      }
    }
  }
}

TEST(TruncationDim, IsTheSmallestDimensionMeetingTheTolerance) {
  for (double s : {0.0, 1.0, 3.0, 8.0, 16.0}) {
    for (double t : {1.0, 2.0}) {
      const int m = truncation_dim(s, t, 1e-10);
      EXPECT_LT(poisson_tail(m, s * s / t), 1e-10);
      if (m > 1) {
        EXPECT_GE(poisson_tail(m - 1, s * s / t), 1e-10) << s << " " << t;
      }
    }
  }
}
