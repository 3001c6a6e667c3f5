#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fock/experiments.hpp"
#include "fock/params.hpp"
#include "fock/radial_profile.hpp"

namespace fock {

struct SearchConfig {
  int rings = 8;
  double r_max = 6.0;
  int iters = 500;
  std::uint64_t seed = 1;
  /// Profile value beyond r_max.
  double tail = 0.0;
  /// Initial ring values; empty means all ones.
  std::vector<double> start;
  std::vector<double> s_grid = default_s_grid();
  double window_frac = 0.5;
  /// Nelder-Mead steps between annealing perturbations.
  int restart_period = 40;
  double initial_temperature = 0.5;
  /// Objectives below this are labelled as candidates, unless the tail
  /// eigenvalues are negligible (then the ratio is 0/0 in disguise).
  double candidate_threshold = 0.1;
};

struct SearchResult {
  RadialProfile best_profile = RadialProfile::constant(0.0);
  RatioObjective objective;
  /// Best profile re-scored with twice the window dimension; a large gap to
  /// `objective` means the finite proxies have not settled.
  RatioObjective objective_double_dim;
  /// (iteration, best objective so far); iteration 0 is the start point.
  std::vector<std::pair<int, double>> history;
  std::uint64_t seed = 0;
  SearchConfig config;
  int evaluations = 0;
  std::string label;
};

/// Minimizes ratio_objective over piecewise-constant profiles with `rings`
/// equispaced rings on [0, r_max] and values in [-1, 1]. Nelder-Mead with
/// periodic simulated-annealing restarts; every random draw comes from a
/// splitmix/xoshiro stream seeded by `seed`, so results are bit-identical for
/// a given config regardless of thread count.
SearchResult search_minimize(const SearchConfig& config, const FockParams& p);

/// Profile for a vector of ring values under `config`.
RadialProfile ring_profile(const SearchConfig& config, const std::vector<double>& values);

/// FNV-1a over the raw bytes of the history.
std::uint64_t history_hash(const SearchResult& r);

}  // namespace fock
