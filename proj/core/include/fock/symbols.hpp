#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fock/params.hpp"
#include "fock/radial_profile.hpp"

namespace fock {

struct Atom {
  cplx position;
  double weight = 0.0;
};

/// Finite signed measure sum_i w_i delta_{p_i}; weights nonzero, positions distinct.
class SignedAtomicMeasure {
 public:
  SignedAtomicMeasure() = default;
  explicit SignedAtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }

  /// |nu| = nu_+ + nu_-.
  SignedAtomicMeasure total_variation() const;

 private:
  std::vector<Atom> atoms_;
};

/// Bounded complex function given by a callable. `bound` is the declared
/// sup-norm; `name` is what the printer emits (catalog names parse back).
struct GeneralSymbol {
  std::function<cplx(cplx)> fn;
  double bound = 0.0;
  bool real_valued = false;
  std::string name;
};

/// h_z(w) = exp(2 i Im(w conj(z)) / t).
struct WeylPhase {
  cplx z;
};

class Symbol;

/// w -> base(w - shift).
struct Translated {
  std::shared_ptr<const Symbol> base;
  cplx shift;
};

class Symbol {
 public:
  using Variant = std::variant<RadialProfile, GeneralSymbol, WeylPhase, Translated, SignedAtomicMeasure>;

  Symbol(RadialProfile f) : v_(std::move(f)) {}                 // NOLINT(google-explicit-constructor)
  Symbol(GeneralSymbol g) : v_(std::move(g)) {}                 // NOLINT(google-explicit-constructor)
  Symbol(WeylPhase h) : v_(h) {}                                // NOLINT(google-explicit-constructor)
  Symbol(Translated tr) : v_(std::move(tr)) {}                  // NOLINT(google-explicit-constructor)
  Symbol(SignedAtomicMeasure m) : v_(std::move(m)) {}           // NOLINT(google-explicit-constructor)

  const Variant& variant() const noexcept { return v_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

 private:
  Variant v_;
};

/// Pointwise value. Throws std::invalid_argument for measures.
cplx evaluate(const Symbol& s, cplx w, const FockParams& p);

/// alpha_z: w -> s(w - z). Throws std::invalid_argument for measures.
Symbol translate(const Symbol& s, cplx z);

bool is_real_valued(const Symbol& s);

/// Declared sup-norm bound (+inf when unbounded).
double sup_bound(const Symbol& s);

/// Grid lower bound of sup_{|z| = rho} sup_{|w| <= 1} |f(z) - f(z - w)|.
/// z runs over `angular_points` equispaced angles; w over 4 rings x 8 angles
/// of the unit disc (32 points, including w = +-1, +-i).
double vo_modulus(const Symbol& s, double rho, const FockParams& p, int angular_points = 64);

/// (nu_+, nu_-) split by weight sign; both carry positive weights.
std::pair<SignedAtomicMeasure, SignedAtomicMeasure> hahn_jordan(const SignedAtomicMeasure& m);

/// max over centers of |nu|(closed ball B(center, R)).
double carleson_ball_bound(const SignedAtomicMeasure& m, double radius, const std::vector<cplx>& centers);

namespace catalog {

/// f(w) = Re(w); unbounded, used for oscillation checks.
Symbol real_part();

/// clamp(Re(w) / (1 + |w|), -1, 1): tends to -1 along the negative real axis
/// and to +1 along the positive one.
Symbol directional();

/// Indicator of the half-plane Re(w) > x0.
Symbol half_plane(double x0);

}  // namespace catalog

}  // namespace fock
