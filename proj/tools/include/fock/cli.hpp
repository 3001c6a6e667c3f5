#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fock::cli {

/// Every default the tool uses. Flags override these; nothing is read from
/// the environment.
struct Defaults {
  double t = 2.0;
  /// 0 lets the library pick the hardware concurrency.
  int threads = 0;
  double tau = 1e-3;

  int assemble_dim = 64;
  int berezin_dim = 64;
  int esspos_radial_dim = 256;
  int esspos_vo_dim = 64;
  int esspos_limitops_dim = 64;
  int limitops_theta_count = 16;
  std::vector<double> limitops_radii{4.0, 8.0, 16.0};
  std::vector<double> vo_radii{1.0, 2.0, 4.0, 8.0, 12.0, 16.0};

  int counterexample_dim = 100;
  std::vector<double> counterexample_radii{0.0, 1.0, 2.0, 3.0};

  int search_dim = 256;
  int search_rings = 8;
  double search_rmax = 6.0;
  int search_iters = 500;
  std::uint64_t search_seed = 1;
  double search_tail = 0.0;
};

const Defaults& defaults();

enum ExitCode : int { ok = 0, usage = 1, numerical = 2, inconclusive = 3 };

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given; errors go to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fock::cli
