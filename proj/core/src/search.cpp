#include "fock/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fock {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256**; uniform and normal draws are written out so the stream does
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // (0, 1]
  double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4]{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

using Point = std::vector<double>;

void clamp_unit(Point& x) {
  for (double& v : x) v = std::clamp(v, -1.0, 1.0);
}

struct Vertex {
  Point x;
  double f;
};

class Searcher {
 public:
  Searcher(const SearchConfig& c, const FockParams& p) : config_(c), params_(p) {}

  double eval(Point x) {
    clamp_unit(x);
    const auto obj = ratio_objective(ring_profile(config_, x), params_, config_.s_grid, config_.window_frac);
    ++evaluations_;
    if (obj.value < best_f_) {
      best_f_ = obj.value;
      best_x_ = x;
      best_obj_ = obj;
    }
    return obj.value;
  }

  std::vector<Vertex> simplex_around(const Point& x0, double step) {
    std::vector<Vertex> s;
    s.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < x0.size(); ++i) {
      Point x = x0;
      x[i] += x[i] > 0.0 ? -step : step;
      clamp_unit(x);
      s.push_back({x, eval(x)});
    }
    return s;
  }

  // One Nelder-Mead iteration with the standard coefficients.
  void nm_step(std::vector<Vertex>& s) {
    std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const std::size_t n = s.size() - 1;
    Point centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += s[i].x[k] / static_cast<double>(n);

    auto along = [&](double coef) {
      Point x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + coef * (s[n].x[k] - centroid[k]);
      clamp_unit(x);
      return x;
    };

    Point xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < s[0].f) {
      Point xe = along(-2.0);
      const double fe = eval(xe);
      s[n] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      return;
    }
    if (fr < s[n - 1].f) {
      s[n] = {xr, fr};
      return;
    }
    Point xc = fr < s[n].f ? along(-0.5) : along(0.5);
    const double fc = eval(xc);
    if (fc < std::min(fr, s[n].f)) {
      s[n] = {xc, fc};
      return;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) s[i].x[k] = s[0].x[k] + 0.5 * (s[i].x[k] - s[0].x[k]);
      s[i].f = eval(s[i].x);
    }
  }

  SearchResult run(Rng& rng) {
    const std::size_t n = static_cast<std::size_t>(config_.rings);
    Point start = config_.start.empty() ? Point(n, 1.0) : config_.start;
    if (start.size() != n) throw std::invalid_argument("search_minimize: start has wrong length");
    clamp_unit(start);

    SearchResult out;
    out.seed = config_.seed;
    out.config = config_;
    double current_f = eval(start);
    Point current = start;
    out.history.emplace_back(0, best_f_);

    if (config_.iters > 0) {
      double temperature = config_.initial_temperature;
      auto simplex = simplex_around(current, 0.25);
      for (int it = 1; it <= config_.iters; ++it) {
        if (config_.restart_period > 0 && it % config_.restart_period == 0) {
          Point candidate = current;
          for (double& v : candidate) v += temperature * rng.normal();
          clamp_unit(candidate);
          const double fc = eval(candidate);
          const double u = rng.uniform();
          const bool accept =
              fc <= current_f ||
              (std::isfinite(fc) && temperature > 0.0 && u < std::exp(-(fc - current_f) / temperature));
          if (accept) {
            current = candidate;
            current_f = fc;
          } else {
            current = best_x_;
            current_f = best_f_;
          }
          simplex = simplex_around(current, std::max(0.05, 0.5 * temperature));
          temperature *= 0.9;
        } else {
          nm_step(simplex);
          const auto lowest =
              std::min_element(simplex.begin(), simplex.end(), [](auto& a, auto& b) { return a.f < b.f; });
          if (lowest->f < current_f) {
            current = lowest->x;
            current_f = lowest->f;
          }
        }
        out.history.emplace_back(it, best_f_);
      }
    }

    out.best_profile = ring_profile(config_, best_x_);
    out.objective = best_obj_;
    out.objective_double_dim = ratio_objective(out.best_profile, params_.with_dim(2 * params_.dim()),
                                               config_.s_grid, config_.window_frac);
    out.evaluations = evaluations_;
    if (best_obj_.numerator_negligible) {
      out.label = "degenerate: negligible tail eigenvalues, not a candidate";
    } else {
      out.label = best_f_ < config_.candidate_threshold ? "candidate, needs analytic follow-up" : "no candidate";
    }
    return out;
  }

 private:
  const SearchConfig& config_;
  FockParams params_;
  int evaluations_ = 0;
  double best_f_ = std::numeric_limits<double>::infinity();
  Point best_x_;
  RatioObjective best_obj_;
};

}  // namespace

RadialProfile ring_profile(const SearchConfig& config, const std::vector<double>& values) {
  if (config.rings < 2) throw std::invalid_argument("ring_profile: rings must be >= 2");
  if (!(config.r_max > 0.0)) throw std::invalid_argument("ring_profile: r_max must be > 0");
  if (values.size() != static_cast<std::size_t>(config.rings))
    throw std::invalid_argument("ring_profile: wrong number of values");
  std::vector<double> edges(config.rings + 1);
  for (int i = 0; i <= config.rings; ++i) edges[i] = config.r_max * i / config.rings;
  return RadialProfile::piecewise(std::move(edges), values, config.tail);
}

SearchResult search_minimize(const SearchConfig& config, const FockParams& p) {
  if (config.rings < 2) throw std::invalid_argument("search_minimize: rings must be >= 2");
  if (config.iters < 0) throw std::invalid_argument("search_minimize: iters must be >= 0");
  Rng rng(config.seed);
  Searcher s(config, p);
  return s.run(rng);
}

std::uint64_t history_hash(const SearchResult& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [it, v] : r.history) {
    const std::int64_t i64 = it;
    feed(&i64, sizeof i64);
    feed(&v, sizeof v);
  }
  return h;
}

}  // namespace fock
