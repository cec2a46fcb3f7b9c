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

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "qchdist/cli.h"
#include "qchdist/linalg.h"

namespace {

using qchdist::cli::kExitNumerical;
using qchdist::cli::kExitOk;
using qchdist::cli::kExitUsage;

int dispatch(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-norm and diamond-norm distances between single-qubit "
               "quantum channels"};
  app.require_subcommand(1);

  qchdist::cli::DistArgs dist;
  CLI::App* dist_cmd =
      app.add_subcommand("dist", "Distance between two channels");
  dist_cmd->add_option("spec1", dist.spec1, "Channel spec (file or inline JSON)")
      ->required();
  dist_cmd->add_option("spec2", dist.spec2, "Channel spec (file or inline JSON)")
      ->required();
  dist_cmd->add_option("--alg", dist.algorithm,
                       "Algorithm: f | k | trace | pauli-analytic");
  dist_cmd->add_option("--trials", dist.trials, "Random-search trials N_r");
  dist_cmd->add_option("--seed", dist.seed, "RNG seed");
  dist_cmd->add_flag("--real-only", dist.real_only,
                     "Restrict the F-search to real amplitudes (phi = 0)");
  dist_cmd->add_option("--threads", dist.threads,
                       "Worker threads (0 = hardware); never affects results");

  qchdist::cli::SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Distances over a parameter grid (CSV)");
  sweep_cmd->add_option("spec1", sweep.spec1, "Channel spec")->required();
  sweep_cmd->add_option("spec2", sweep.spec2, "Channel spec")->required();
  sweep_cmd
      ->add_option("--grid", sweep.grids,
                   "Grid as <1|2>.<param>:start:stop:steps (repeatable)")
      ->required();
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path")->required();
  sweep_cmd->add_option("--alg", sweep.algorithm, "Algorithm: f | k");
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per grid point");
  sweep_cmd->add_option("--seed", sweep.seed, "Base RNG seed");
  sweep_cmd->add_flag("--real-only", sweep.real_only,
                      "Restrict the F-search to real amplitudes");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");

  qchdist::cli::ConvergeArgs converge;
  CLI::App* converge_cmd = app.add_subcommand(
      "converge", "Running-max error traces and fitted exponents (CSV)");
  converge_cmd->add_option("spec1", converge.spec1, "Channel spec");
  converge_cmd->add_option("spec2", converge.spec2, "Channel spec");
  CLI::Option* ref_opt =
      converge_cmd->add_option("--reference", converge.reference,
                               "Reference value the search converges to");
  converge_cmd->add_flag("--auto", converge.auto_reference,
                         "Derive the reference from the Pauli closed form");
  converge_cmd->add_option("--seeds", converge.seeds, "Number of seeds");
  converge_cmd->add_option("--seed", converge.seed, "Base RNG seed");
  converge_cmd->add_option("--trials", converge.trials, "Trials per seed");
  converge_cmd->add_flag("--real-only", converge.real_only,
                         "Restrict the F-search to real amplitudes");
  converge_cmd->add_option("--out", converge.out_path, "Output CSV path")
      ->required();
  CLI::Option* self_test_opt = converge_cmd->add_option(
      "--self-test-exponent", converge.self_test_exponent,
      "Plant an exact power law and recover its exponent (no channels)");
  converge_cmd->add_option("--threads", converge.threads, "Worker threads");

  qchdist::cli::BellCompareArgs bell;
  CLI::App* bell_cmd = app.add_subcommand(
      "bell-compare",
      "Analytic trace norm vs Bell-input distance for displacement-z (CSV)");
  bell_cmd->add_option("--steps", bell.steps, "Grid points over [0, pi/2]");
  bell_cmd->add_option("--out", bell.out_path, "Output CSV path")->required();

  const int parse_status = dispatch(app, argc, argv);
  if (parse_status != kExitOk || app.get_subcommands().empty()) {
    return parse_status;
  }

  try {
    if (dist_cmd->parsed()) return qchdist::cli::run_dist(dist);
    if (sweep_cmd->parsed()) return qchdist::cli::run_sweep(sweep);
    if (converge_cmd->parsed()) {
      converge.has_reference = ref_opt->count() > 0;
      converge.self_test = self_test_opt->count() > 0;
      if (!converge.self_test &&
          (converge.spec1.empty() || converge.spec2.empty())) {
        throw std::invalid_argument(
            "converge: spec1 and spec2 are required unless "
            "--self-test-exponent is given");
      }
      return qchdist::cli::run_converge(converge);
    }
    if (bell_cmd->parsed()) return qchdist::cli::run_bell_compare(bell);
  } catch (const qchdist::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
