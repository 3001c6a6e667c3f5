#include <gtest/gtest.h>

#include <cmath>

#include "fock/berezin.hpp"
#include "fock/quadrature.hpp"

using namespace fock;

TEST(Berezin, GaussianSymbolHasClosedFormHeatTransform) {
  // (1/(pi t)) int e^{-|w|^2/a} e^{-|z-w|^2/t} dw = a/(a+t) e^{-|z|^2/(a+t)}
  const double t = 2.0, a = 1.3;
  const FockParams p(t, 8);
  const GeneralSymbol g{[a](cplx w) { return cplx(std::exp(-std::norm(w) / a)); }, 1.0, true, "g"};
  for (cplx z : {cplx(0, 0), cplx(1, -1), cplx(0, 3), cplx(-2.5, 0.5)}) {
    const double exact = a / (a + t) * std::exp(-std::norm(z) / (a + t));
    EXPECT_NEAR(heat_transform_symbol(g, z, p).value.real(), exact, 1e-10) << z;
  }
}

TEST(Berezin, RadialAndPolarHeatRoutesAgree) {
  const double t = 2.0;
  const FockParams p(t, 8);
  const auto f = RadialProfile::rational(5, 1);
  const GeneralSymbol g{[f](cplx w) { return cplx(f(std::abs(w))); }, 5.0, true, "rat"};
  for (double s : {0.0, 0.5, 2.0, 3.5}) {
    EXPECT_NEAR(heat_transform_symbol(f, cplx(s, 0), p).value.real(),
                heat_transform_symbol(g, cplx(0, s), p).value.real(), 1e-8)
        << s;
  }
}

TEST(Berezin, ThreeRoutesAgreeForRadialProfiles) {
  const double t = 2.0;
  for (const auto& f : {RadialProfile::constant(0.5), RadialProfile::indicator(1.0), RadialProfile::rational(5, 1),
                        RadialProfile::piecewise({0, 1, 2}, {-1, 0.5}, 0.25)}) {
    const FockParams p(t, 80);
    const auto eig = radial_eigenvalues(f, p);
    const auto mat = assemble_general(f, p);
    for (double s : {0.0, 1.0, 2.5}) {
      const double series = radial_berezin_series(eig, s).value.real();
      const double heat = heat_transform_symbol(f, cplx(0, s), p).value.real();
      const auto from_matrix = berezin_from_matrix(mat, std::polar(s, 0.7), p);
      EXPECT_NEAR(series, heat, 1e-8) << f.kind() << " s=" << s;
      EXPECT_NEAR(series, from_matrix.value.real(), 1e-10) << f.kind() << " s=" << s;
      EXPECT_NEAR(from_matrix.value.imag(), 0.0, 1e-14);
      EXPECT_FALSE(from_matrix.truncation_warning);
    }
  }
}

TEST(Berezin, IdentityHasBerezinOneAndTruncationIsFlagged) {
  const FockParams p(2.0, 40);
  const auto id = ComplexMatrix::identity(40);
  const auto near = berezin_from_matrix(id, cplx(1, 1), p);
  EXPECT_NEAR(near.value.real(), 1.0, 1e-14);
  EXPECT_FALSE(near.truncation_warning);
  const auto far = berezin_from_matrix(id, cplx(12, 0), p);
  EXPECT_TRUE(far.truncation_warning);
  EXPECT_LT(far.value.real(), 0.5);
  EXPECT_GE(far.tail_bound, 1.0 - far.value.real() - 1e-12);
}

TEST(Berezin, SeriesTailBoundCoversTruncationError) {
  const double t = 2.0;
  const auto f = RadialProfile::rational(5, 1);
  const auto big = radial_eigenvalues(f, FockParams(t, 200));
  const auto small = radial_eigenvalues(f, FockParams(t, 20));
  for (double s : {2.0, 4.0, 6.0}) {
    const auto a = radial_berezin_series(small, s);
    const auto b = radial_berezin_series(big, s);
    EXPECT_LE(std::abs(a.value - b.value), a.tail_bound + 1e-14) << s;
  }
}

TEST(Berezin, MeasureHeatTransformFormula) {
  const double t = 1.5;
  const FockParams p(t, 8);
  const SignedAtomicMeasure nu({{cplx(1, 0), 2.0}, {cplx(0, -1), -0.5}});
  const cplx z(0.3, 0.4);
  const double expected = (2.0 * std::exp(-std::norm(z - cplx(1, 0)) / t) -
                           0.5 * std::exp(-std::norm(z - cplx(0, -1)) / t)) /
                          (M_PI * t);
  EXPECT_NEAR(heat_transform_measure(nu, z, p), expected, 1e-15);
  EXPECT_NEAR(heat_transform_symbol(nu, z, p).value.real(), expected, 1e-15);
  // The matrix route sees the same thing.
  const auto a = assemble_measure(nu, FockParams(t, 60));
  EXPECT_NEAR(berezin_from_matrix(a, z, FockParams(t, 60)).value.real(), expected, 1e-12);
}

TEST(Berezin, TranslationCovariance) {
  const FockParams p(2.0, 8);
  const GeneralSymbol f{[](cplx w) { return cplx(std::exp(-std::norm(w - cplx(0.5, 0.0)) / 3.0) * std::cos(w.imag())); },
                        1.0, true, "bump"};
  const cplx a(2.0, -1.0);
  for (cplx z : {cplx(0, 0), cplx(1, 2), cplx(-3, 0.5)}) {
    EXPECT_NEAR(std::abs(heat_transform_symbol(translate(f, a), z + a, p).value - heat_transform_symbol(f, z, p).value),
                0.0, 1e-8);
  }
}

TEST(Berezin, WeylSymbolModulus) {
  // |B(h_z)(w)| = e^{-|z|^2/t} for every w.
  const double t = 2.0;
  for (double r : {1.0, 2.0, 3.0}) {
    const auto a = assemble_weyl_phase(cplx(r, 0), FockParams(t, 120));
    for (cplx w : {cplx(0, 0), cplx(1, 1), cplx(-2, 0.5)}) {
      EXPECT_NEAR(std::abs(berezin_from_matrix(a, w, FockParams(t, 120)).value), std::exp(-r * r / t), 1e-12);
    }
    EXPECT_NEAR(std::abs(heat_transform_symbol(WeylPhase{cplx(r, 0)}, cplx(0.5, 0.5), FockParams(t, 8)).value),
                std::exp(-r * r / t), 1e-9);
  }
}
