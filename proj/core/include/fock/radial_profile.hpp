#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fock {

namespace radial {

struct Constant {
  double value = 0.0;
};

/// r^k with k an even nonnegative integer. Unbounded for k > 0.
struct Power {
  int exponent = 0;
};

/// Indicator of the closed disc of radius R.
struct Indicator {
  double radius = 1.0;
};

/// values[l] on [edges[l], edges[l+1]), tail for r >= edges.back().
/// edges[0] == 0; values and tail clamped to [-1, 1].
struct PiecewiseConstant {
  std::vector<double> edges;
  std::vector<double> values;
  double tail = 0.0;
};

/// scale * (r^2 - a) / (r^2 + b), b > 0.
struct Rational {
  double a = 0.0;
  double b = 1.0;
  double scale = 1.0;
};

/// Linear interpolation in r between samples, constant extrapolation.
/// `source` remembers the CSV path the samples came from, if any.
struct Sampled {
  std::vector<double> radii;
  std::vector<double> values;
  std::string source;
};

}  // namespace radial

/// Real-valued radial symbol profile f(r), r = |w|.
class RadialProfile {
 public:
  using Variant = std::variant<radial::Constant, radial::Power, radial::Indicator,
                               radial::PiecewiseConstant, radial::Rational, radial::Sampled>;

  static RadialProfile constant(double c);
  static RadialProfile power(int exponent);
  static RadialProfile indicator(double radius);
  static RadialProfile piecewise(std::vector<double> edges, std::vector<double> values, double tail);
  static RadialProfile rational(double a, double b, double scale = 1.0);
  static RadialProfile sampled(std::vector<double> radii, std::vector<double> values,
                               std::string source = {});

  double operator()(double r) const;

  /// sup_r |f(r)|; +inf for unbounded profiles.
  double sup_norm() const;

  /// lim_{r -> inf} f(r) when it exists (nullopt for Power with k > 0).
  std::optional<double> limit_at_infinity() const;

  /// Radii where f is discontinuous or not smooth (sorted, > 0).
  std::vector<double> breakpoints() const;

  /// Profiles whose eigenvalues come from closed-form incomplete-gamma sums.
  bool is_piecewise() const;

  /// Short tag used in reports, e.g. "rational".
  std::string kind() const;

  const Variant& variant() const noexcept { return v_; }

 private:
  explicit RadialProfile(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

}  // namespace fock
