#include "fock/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fock/symbol_parse.hpp"
#include "overloaded.hpp"

namespace fock {

using detail::overloaded;

SignedAtomicMeasure::SignedAtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& a = atoms_[i];
    if (a.weight == 0.0 || !std::isfinite(a.weight)) {
      throw std::invalid_argument("measure atoms need finite nonzero weights");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (atoms_[j].position == a.position) throw std::invalid_argument("measure atom positions must be distinct");
    }
  }
}

SignedAtomicMeasure SignedAtomicMeasure::total_variation() const {
  auto atoms = atoms_;
  for (auto& a : atoms) a.weight = std::abs(a.weight);
  return SignedAtomicMeasure(std::move(atoms));
}

cplx evaluate(const Symbol& s, cplx w, const FockParams& p) {
  return std::visit(
      overloaded{
          [&](const RadialProfile& f) { return cplx(f(std::abs(w))); },
          [&](const GeneralSymbol& g) { return g.fn(w); },
          [&](const WeylPhase& h) {
            return std::polar(1.0, 2.0 * (w * std::conj(h.z)).imag() / p.t());
          },
          [&](const Translated& tr) { return evaluate(*tr.base, w - tr.shift, p); },
          [](const SignedAtomicMeasure&) -> cplx {
            throw std::invalid_argument("atomic measures have no pointwise values");
          },
      },
      s.variant());
}

Symbol translate(const Symbol& s, cplx z) {
  if (s.is<SignedAtomicMeasure>()) throw std::invalid_argument("translate: atomic measures are not supported");
  return Translated{std::make_shared<const Symbol>(s), z};
}

bool is_real_valued(const Symbol& s) {
  return std::visit(overloaded{
                        [](const RadialProfile&) { return true; },
                        [](const GeneralSymbol& g) { return g.real_valued; },
                        [](const WeylPhase& h) { return h.z == cplx(0.0); },
                        [](const Translated& tr) { return is_real_valued(*tr.base); },
                        [](const SignedAtomicMeasure&) { return true; },
                    },
                    s.variant());
}

double sup_bound(const Symbol& s) {
  return std::visit(overloaded{
                        [](const RadialProfile& f) { return f.sup_norm(); },
                        [](const GeneralSymbol& g) { return g.bound; },
                        [](const WeylPhase&) { return 1.0; },
                        [](const Translated& tr) { return sup_bound(*tr.base); },
                        [](const SignedAtomicMeasure&) { return std::numeric_limits<double>::infinity(); },
                    },
                    s.variant());
}

double vo_modulus(const Symbol& s, double rho, const FockParams& p, int angular_points) {
  if (angular_points < 1) throw std::invalid_argument("vo_modulus: need at least one angular point");
  constexpr int kRings = 4;
  constexpr int kDiscAngles = 8;
  std::vector<cplx> disc;
  for (int i = 1; i <= kRings; ++i) {
    for (int k = 0; k < kDiscAngles; ++k) {
      disc.push_back(std::polar(static_cast<double>(i) / kRings, 2.0 * std::numbers::pi * k / kDiscAngles));
    }
  }
  double worst = 0.0;
  for (int k = 0; k < angular_points; ++k) {
    const cplx z = std::polar(rho, 2.0 * std::numbers::pi * k / angular_points);
    const cplx fz = evaluate(s, z, p);
    for (const cplx w : disc) worst = std::max(worst, std::abs(fz - evaluate(s, z - w, p)));
  }
  return worst;
}

std::pair<SignedAtomicMeasure, SignedAtomicMeasure> hahn_jordan(const SignedAtomicMeasure& m) {
  std::vector<Atom> pos, neg;
  for (const auto& a : m.atoms()) {
    if (a.weight > 0.0) {
      pos.push_back(a);
    } else {
      neg.push_back({a.position, -a.weight});
    }
  }
  return {SignedAtomicMeasure(std::move(pos)), SignedAtomicMeasure(std::move(neg))};
}

double carleson_ball_bound(const SignedAtomicMeasure& m, double radius, const std::vector<cplx>& centers) {
  if (!(radius > 0.0)) throw std::invalid_argument("carleson_ball_bound: radius must be > 0");
  double best = 0.0;
  for (const cplx c : centers) {
    double mass = 0.0;
    for (const auto& a : m.atoms()) {
      if (std::abs(a.position - c) <= radius) mass += std::abs(a.weight);
    }
    best = std::max(best, mass);
  }
  return best;
}

namespace catalog {

Symbol real_part() {
  return GeneralSymbol{[](cplx w) { return cplx(w.real()); }, std::numeric_limits<double>::infinity(), true,
                       "re"};
}

Symbol directional() {
  return GeneralSymbol{[](cplx w) { return cplx(std::clamp(w.real() / (1.0 + std::abs(w)), -1.0, 1.0)); }, 1.0,
                       true, "dir"};
}

Symbol half_plane(double x0) {
  return GeneralSymbol{[x0](cplx w) { return cplx(w.real() > x0 ? 1.0 : 0.0); }, 1.0, true,
                       "half:" + format_number(x0)};
}

}  // namespace catalog

}  // namespace fock
