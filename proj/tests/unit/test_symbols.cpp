#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fock/berezin.hpp"
#include "fock/symbols.hpp"

using namespace fock;

namespace {
const FockParams kP(2.0, 16);
}

TEST(Symbols, EvaluateEachKind) {
  EXPECT_EQ(evaluate(RadialProfile::indicator(1.0), cplx(0.6, 0.6), kP), cplx(1.0));
  const cplx z(1.0, 0.5), w(-0.3, 2.0);
  const cplx h = evaluate(WeylPhase{z}, w, kP);
  EXPECT_NEAR(std::abs(h - std::exp(cplx(0.0, 2.0 * std::imag(w * std::conj(z)) / 2.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h), 1.0, 1e-15);
  EXPECT_NEAR(evaluate(catalog::directional(), cplx(-3.0, 0.0), kP).real(), -0.75, 1e-15);
  EXPECT_EQ(evaluate(catalog::half_plane(1.0), cplx(1.5, -7.0), kP), cplx(1.0));
  EXPECT_EQ(evaluate(catalog::half_plane(1.0), cplx(0.5, 7.0), kP), cplx(0.0));
  EXPECT_EQ(evaluate(catalog::real_part(), cplx(0.25, 9.0), kP), cplx(0.25));
  EXPECT_THROW(evaluate(SignedAtomicMeasure({{cplx(0, 0), 1.0}}), cplx(0, 0), kP), std::invalid_argument);
}

TEST(Symbols, TranslationShiftsArgumentAndComposes) {
  const Symbol f = catalog::directional();
  std::mt19937_64 gen(3);
  std::normal_distribution<double> n(0.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const cplx a(n(gen), n(gen)), b(n(gen), n(gen)), w(n(gen), n(gen));
    EXPECT_EQ(evaluate(translate(f, a), w, kP), evaluate(f, w - a, kP));
    EXPECT_NEAR(std::abs(evaluate(translate(translate(f, a), b), w, kP) - evaluate(translate(f, a + b), w, kP)), 0.0,
                1e-14);
  }
  EXPECT_THROW(translate(SignedAtomicMeasure({{cplx(0, 0), 1.0}}), cplx(1, 0)), std::invalid_argument);
}

TEST(Symbols, RealnessAndBounds) {
  EXPECT_TRUE(is_real_valued(RadialProfile::constant(1.0)));
  EXPECT_TRUE(is_real_valued(catalog::directional()));
  EXPECT_FALSE(is_real_valued(WeylPhase{cplx(1.0, 0.0)}));
  EXPECT_TRUE(is_real_valued(WeylPhase{cplx(0.0, 0.0)}));
  EXPECT_TRUE(is_real_valued(translate(catalog::half_plane(0.0), cplx(2, 2))));
  EXPECT_EQ(sup_bound(WeylPhase{cplx(3, 1)}), 1.0);
  EXPECT_EQ(sup_bound(catalog::directional()), 1.0);
  EXPECT_TRUE(std::isinf(sup_bound(catalog::real_part())));
  EXPECT_NEAR(sup_bound(RadialProfile::rational(5.0, 1.0)), 5.0, 1e-15);
}

TEST(Symbols, VanishingOscillationModulus) {
  // Radial rational profile flattens out; the half-plane indicator keeps a jump.
  const Symbol rat = RadialProfile::rational(5.0, 1.0);
  double prev = vo_modulus(rat, 1.0, kP);
  for (double rho : {2.0, 4.0, 8.0, 16.0}) {
    const double v = vo_modulus(rat, rho, kP);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 0.01);
  EXPECT_EQ(vo_modulus(catalog::half_plane(0.0), 16.0, kP), 1.0);
  EXPECT_EQ(vo_modulus(RadialProfile::constant(0.4), 3.0, kP), 0.0);
  // Re w moves by |w| <= 1 under unit shifts.
  EXPECT_NEAR(vo_modulus(catalog::real_part(), 5.0, kP), 1.0, 1e-12);
}

TEST(Measures, ValidationAndHahnJordan) {
  EXPECT_THROW(SignedAtomicMeasure({{cplx(0, 0), 0.0}}), std::invalid_argument);
  EXPECT_THROW(SignedAtomicMeasure({{cplx(1, 0), 1.0}, {cplx(1, 0), 2.0}}), std::invalid_argument);

  const SignedAtomicMeasure nu({{cplx(0, 0), 2.0}, {cplx(1, 1), -0.5}, {cplx(-3, 0), 1.5}});
  const auto [pos, neg] = hahn_jordan(nu);
  ASSERT_EQ(pos.atoms().size(), 2u);
  ASSERT_EQ(neg.atoms().size(), 1u);
  EXPECT_EQ(neg.atoms()[0].weight, 0.5);
  for (const auto& a : pos.atoms()) EXPECT_GT(a.weight, 0.0);
  // nu = nu+ - nu- pointwise; |nu| = nu+ + nu-.
  const auto tv = nu.total_variation();
  double tv_mass = 0.0, split_mass = 0.0;
  for (const auto& a : tv.atoms()) tv_mass += a.weight;
  for (const auto& a : pos.atoms()) split_mass += a.weight;
  for (const auto& a : neg.atoms()) split_mass += a.weight;
  EXPECT_DOUBLE_EQ(tv_mass, 4.0);
  EXPECT_DOUBLE_EQ(split_mass, 4.0);
}

TEST(Measures, CarlesonCriteriaAgree) {
  // For a positive measure, the heat transform at z dominates
  // e^{-r^2/t}/(pi t) times the mass of B(z, r): ball boundedness and
  // Berezin boundedness go together.
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-4.0, 4.0), wdist(0.1, 2.0);
  std::vector<Atom> atoms;
  for (int i = 0; i < 40; ++i) atoms.push_back({cplx(u(gen), u(gen)), wdist(gen)});
  const SignedAtomicMeasure nu(atoms);
  const double r = 1.0, t = kP.t();
  for (int i = 0; i < 30; ++i) {
    const cplx z(u(gen), u(gen));
    const double ball = carleson_ball_bound(nu, r, {z});
    const double heat = heat_transform_measure(nu, z, kP);
    EXPECT_GE(heat + 1e-15, std::exp(-r * r / t) / (M_PI * t) * ball);
  }
  EXPECT_THROW(carleson_ball_bound(nu, 0.0, {cplx(0, 0)}), std::invalid_argument);
  const SignedAtomicMeasure single({{cplx(0.5, 0), -3.0}});
  EXPECT_EQ(carleson_ball_bound(single, 1.0, {cplx(0, 0), cplx(5, 0)}), 3.0);
}
