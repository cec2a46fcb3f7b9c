// Copyright 2026 The qchdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHDIST_CLI_H
#define QCHDIST_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qchdist::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // parse / validation failure
inline constexpr int kExitNumerical = 3;  // numerical contract violation

/// `dist <spec1> <spec2>`: trace and diamond distance between two channels
/// plus the discrimination error probabilities.
struct DistArgs {
  std::string spec1;
  std::string spec2;
  std::string algorithm = "f";  // f | k | trace | pauli-analytic
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  bool real_only = false;
  int threads = 0;
};
void write_dist_report(const DistArgs& args, std::ostream& out);
int run_dist(const DistArgs& args);

/// `sweep <spec1> <spec2> --grid name:start:stop:steps ... --out csv`:
/// distances over a Cartesian parameter grid. Grid names are `1.param` or
/// `2.param`, addressing a numeric field of the first or second spec.
struct SweepArgs {
  std::string spec1;
  std::string spec2;
  std::vector<std::string> grids;
  std::string out_path;
  std::string algorithm = "f";  // f | k
  std::uint64_t trials = 20000;
  std::uint64_t seed = 1;
  bool real_only = false;
  int threads = 0;
};
void write_sweep_csv(const SweepArgs& args, std::ostream& out);
int run_sweep(const SweepArgs& args);

/// `converge <spec1> <spec2> --reference R|--auto --seeds K --out csv`:
/// running-max error traces delta(N_r) for several seeds with fitted
/// power-law exponents. --auto derives the reference from the analytic
/// Pauli formula when both specs are Pauli-type. The self-test mode plants
/// an exact power law and recovers its exponent through the same fit.
struct ConvergeArgs {
  std::string spec1;
  std::string spec2;
  double reference = 0.0;
  bool has_reference = false;
  bool auto_reference = false;
  int seeds = 10;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  bool real_only = false;
  std::string out_path;
  bool self_test = false;
  double self_test_exponent = -1.0;
  int threads = 0;
};
void write_converge_csv(const ConvergeArgs& args, std::ostream& out);
int run_converge(const ConvergeArgs& args);

/// `bell-compare --steps N --out csv`: the analytic trace norm
/// 2 sin^2(theta_z) of displacement-z against the identity, next to the
/// Bell-input output distance, over a theta_z grid. Deterministic (no
/// sampling).
struct BellCompareArgs {
  int steps = 50;
  std::string out_path;
};
void write_bell_compare_csv(const BellCompareArgs& args, std::ostream& out);
int run_bell_compare(const BellCompareArgs& args);

/// "%.12g" rendering used for every number the CLI emits.
std::string format_number(double value);

}  // namespace qchdist::cli

#endif  // QCHDIST_CLI_H
