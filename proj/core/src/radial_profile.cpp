#include "fock/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "overloaded.hpp"

namespace fock {
namespace {

using detail::overloaded;

void require_increasing(const std::vector<double>& xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument(std::string(what) + " must be strictly increasing");
  }
}

}  // namespace

RadialProfile RadialProfile::constant(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("constant profile must be finite");
  return RadialProfile(radial::Constant{c});
}

RadialProfile RadialProfile::power(int exponent) {
  if (exponent < 0 || exponent % 2 != 0) {
    throw std::invalid_argument("power profile exponent must be an even nonnegative integer");
  }
  return RadialProfile(radial::Power{exponent});
}

RadialProfile RadialProfile::indicator(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("indicator radius must be > 0");
  return RadialProfile(radial::Indicator{radius});
}

RadialProfile RadialProfile::piecewise(std::vector<double> edges, std::vector<double> values, double tail) {
  if (edges.size() < 2) throw std::invalid_argument("piecewise profile needs at least two edges");
  if (edges.front() != 0.0) throw std::invalid_argument("piecewise profile edges must start at 0");
  require_increasing(edges, "piecewise profile edges");
  if (values.size() + 1 != edges.size()) {
    throw std::invalid_argument("piecewise profile needs exactly one value per interval");
  }
  if (!std::isfinite(tail)) throw std::invalid_argument("piecewise tail must be finite");
  for (auto& v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("piecewise values must be finite");
    v = std::clamp(v, -1.0, 1.0);
  }
  return RadialProfile(radial::PiecewiseConstant{std::move(edges), std::move(values), std::clamp(tail, -1.0, 1.0)});
}

RadialProfile RadialProfile::rational(double a, double b, double scale) {
  if (!(b > 0.0)) throw std::invalid_argument("rational profile requires b > 0");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(scale)) {
    throw std::invalid_argument("rational profile parameters must be finite");
  }
  return RadialProfile(radial::Rational{a, b, scale});
}

RadialProfile RadialProfile::sampled(std::vector<double> radii, std::vector<double> values, std::string source) {
  if (radii.empty() || radii.size() != values.size()) {
    throw std::invalid_argument("sampled profile needs matching, nonempty radii and values");
  }
  if (radii.front() < 0.0) throw std::invalid_argument("sampled profile radii must be >= 0");
  require_increasing(radii, "sampled profile radii");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("sampled profile values must be finite");
  }
  return RadialProfile(radial::Sampled{std::move(radii), std::move(values), std::move(source)});
}

double RadialProfile::operator()(double r) const {
  return std::visit(
      overloaded{
          [](const radial::Constant& c) { return c.value; },
          [r](const radial::Power& p) { return std::pow(r, p.exponent); },
          [r](const radial::Indicator& ind) { return r <= ind.radius ? 1.0 : 0.0; },
          [r](const radial::PiecewiseConstant& pw) {
            if (r >= pw.edges.back()) return pw.tail;
            auto it = std::upper_bound(pw.edges.begin(), pw.edges.end(), r);
            return pw.values[static_cast<std::size_t>(it - pw.edges.begin()) - 1];
          },
          [r](const radial::Rational& q) {
            const double r2 = r * r;
            return q.scale * (r2 - q.a) / (r2 + q.b);
          },
          [r](const radial::Sampled& s) {
            if (r <= s.radii.front()) return s.values.front();
            if (r >= s.radii.back()) return s.values.back();
            auto it = std::upper_bound(s.radii.begin(), s.radii.end(), r);
            const auto hi = static_cast<std::size_t>(it - s.radii.begin());
            const auto lo = hi - 1;
            const double frac = (r - s.radii[lo]) / (s.radii[hi] - s.radii[lo]);
            return s.values[lo] + frac * (s.values[hi] - s.values[lo]);
          },
      },
      v_);
}

double RadialProfile::sup_norm() const {
  return std::visit(
      overloaded{
          [](const radial::Constant& c) { return std::abs(c.value); },
          [](const radial::Power& p) {
            return p.exponent == 0 ? 1.0 : std::numeric_limits<double>::infinity();
          },
          [](const radial::Indicator&) { return 1.0; },
          [](const radial::PiecewiseConstant& pw) {
            double m = std::abs(pw.tail);
            for (double v : pw.values) m = std::max(m, std::abs(v));
            return m;
          },
          [](const radial::Rational& q) {
            // (u - a)/(u + b) is monotone in u = r^2 >= 0: extremes at u = 0 and u -> inf.
            return std::abs(q.scale) * std::max(1.0, std::abs(q.a / q.b));
          },
          [](const radial::Sampled& s) {
            double m = 0.0;
            for (double v : s.values) m = std::max(m, std::abs(v));
            return m;
          },
      },
      v_);
}

std::optional<double> RadialProfile::limit_at_infinity() const {
  return std::visit(
      overloaded{
          [](const radial::Constant& c) -> std::optional<double> { return c.value; },
          [](const radial::Power& p) -> std::optional<double> {
            if (p.exponent == 0) return 1.0;
            return std::nullopt;
          },
          [](const radial::Indicator&) -> std::optional<double> { return 0.0; },
          [](const radial::PiecewiseConstant& pw) -> std::optional<double> { return pw.tail; },
          [](const radial::Rational& q) -> std::optional<double> { return q.scale; },
          [](const radial::Sampled& s) -> std::optional<double> { return s.values.back(); },
      },
      v_);
}

std::vector<double> RadialProfile::breakpoints() const {
  return std::visit(
      overloaded{
          [](const radial::Indicator& ind) { return std::vector<double>{ind.radius}; },
          [](const radial::PiecewiseConstant& pw) {
            return std::vector<double>(pw.edges.begin() + 1, pw.edges.end());
          },
          [](const radial::Sampled& s) {
            std::vector<double> out;
            for (double r : s.radii) {
              if (r > 0.0) out.push_back(r);
            }
            return out;
          },
          [](const auto&) { return std::vector<double>{}; },
      },
      v_);
}

bool RadialProfile::is_piecewise() const {
  return std::holds_alternative<radial::Indicator>(v_) ||
         std::holds_alternative<radial::PiecewiseConstant>(v_) ||
         std::holds_alternative<radial::Sampled>(v_);
}

std::string RadialProfile::kind() const {
  return std::visit(overloaded{
                        [](const radial::Constant&) { return std::string("constant"); },
                        [](const radial::Power&) { return std::string("power"); },
                        [](const radial::Indicator&) { return std::string("indicator"); },
                        [](const radial::PiecewiseConstant&) { return std::string("piecewise"); },
                        [](const radial::Rational&) { return std::string("rational"); },
                        [](const radial::Sampled&) { return std::string("sampled"); },
                    },
                    v_);
}

}  // namespace fock
