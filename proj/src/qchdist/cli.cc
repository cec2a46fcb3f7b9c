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

#include "qchdist/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qchdist/channel_spec.h"
#include "qchdist/discrimination.h"
#include "qchdist/kitaev.h"

namespace qchdist::cli {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Grid {
  std::string name;  // as written, e.g. "2.theta"
  int target = 0;    // 1 or 2
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  double value(int i) const {
    return steps == 1 ? start
                      : start + (stop - start) * i / double(steps - 1);
  }
};

Grid parse_grid(const std::string& text) {
  Grid g;
  g.name = text.substr(0, text.find(':'));
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4) {
    throw std::invalid_argument("grid '" + text +
                                "': expected name:start:stop:steps");
  }
  const auto dot = parts[0].find('.');
  if (dot == std::string::npos || (parts[0][0] != '1' && parts[0][0] != '2') ||
      dot != 1) {
    throw std::invalid_argument("grid '" + text +
                                "': name must be 1.<param> or 2.<param>");
  }
  g.target = parts[0][0] - '0';
  g.param = parts[0].substr(2);
  if (g.param.empty()) {
    throw std::invalid_argument("grid '" + text + "': empty parameter name");
  }
  try {
    g.start = std::stod(parts[1]);
    g.stop = std::stod(parts[2]);
    g.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid '" + text + "': malformed numbers");
  }
  if (g.steps < 1) {
    throw std::invalid_argument("grid '" + text + "': steps must be >= 1");
  }
  return g;
}

McOptions mc_options(int threads) {
  McOptions o;
  o.threads = threads;
  return o;
}

void echo_common(std::ostream& out, const char* command,
                 const ChannelSpec& s1, const ChannelSpec& s2,
                 const std::string& algorithm, std::uint64_t trials,
                 bool real_only) {
  out << "# qchdist " << command << "\n";
  out << "# channel1 " << s1.raw.dump() << "\n";
  out << "# channel2 " << s2.raw.dump() << "\n";
  out << "# algorithm " << algorithm << "\n";
  out << "# trials " << trials << "\n";
  out << "# real_only " << (real_only ? "true" : "false") << "\n";
}

double fold_diamond(double diamond_estimate, double trace_estimate) {
  // Both searches converge to their targets from below and the diamond norm
  // dominates the trace norm, so the larger estimate is the sharper valid
  // lower bound on the diamond distance.
  return std::max(diamond_estimate, trace_estimate);
}

struct DistanceRow {
  double trace = 0.0;
  double diamond = 0.0;
};

DistanceRow compute_pair(const ChannelSpec& s1, const ChannelSpec& s2,
                         const std::string& algorithm, std::uint64_t trials,
                         std::uint64_t seed, bool real_only, int threads) {
  McOptions options = mc_options(threads);
  options.record_trace = false;
  const SearchResult trace_result = trace_distance_channels(
      s1.channel, s2.channel, trials, seed, options);
  SearchResult diamond_result;
  if (algorithm == "f") {
    diamond_result = diamond_distance_f(s1.channel, s2.channel, trials, seed,
                                        real_only, options);
  } else if (algorithm == "k") {
    diamond_result = diamond_distance_k(s1.channel.kraus, s2.channel.kraus,
                                        trials, seed,
                                        KitaevSampling::kMixedBloch, options);
  } else {
    throw std::invalid_argument("algorithm '" + algorithm +
                                "' not usable here (need f or k)");
  }
  return {trace_result.best_value,
          fold_diamond(diamond_result.best_value, trace_result.best_value)};
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + path + "'");
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_dist_report(const DistArgs& args, std::ostream& out) {
  const ChannelSpec s1 = parse_channel_spec(args.spec1);
  const ChannelSpec s2 = parse_channel_spec(args.spec2);
  const std::string& alg = args.algorithm;
  if (alg != "f" && alg != "k" && alg != "trace" && alg != "pauli-analytic") {
    throw std::invalid_argument("dist: unknown algorithm '" + alg + "'");
  }
  echo_common(out, "dist", s1, s2, alg, args.trials, args.real_only);
  out << "# seed " << args.seed << "\n";

  if (alg == "pauli-analytic") {
    if (!s1.pauli_type || !s2.pauli_type) {
      throw std::invalid_argument(
          "dist: pauli-analytic needs two Pauli-type channels, got kinds '" +
          s1.kind + "' and '" + s2.kind + "'");
    }
    const double diamond = pauli_diamond(s1.weights, s2.weights);
    out << "diamond_distance " << format_number(diamond) << "\n";
    out << "diamond_argmax maximally_entangled\n";
    out << "p_e " << format_number(0.5 - diamond / 4.0) << "\n";
    return;
  }

  const McOptions options = mc_options(args.threads);
  const SearchResult trace_result = trace_distance_channels(
      s1.channel, s2.channel, args.trials, args.seed, options);
  out << "trace_distance " << format_number(trace_result.best_value) << "\n";
  out << "trace_argmax theta " << format_number(trace_result.best_params[0])
      << " phi " << format_number(trace_result.best_params[1]) << "\n";

  if (alg == "trace") {
    out << "p_e_prime " << format_number(0.5 - trace_result.best_value / 4.0)
        << "\n";
    return;
  }

  SearchResult diamond_result;
  if (alg == "f") {
    diamond_result = diamond_distance_f(s1.channel, s2.channel, args.trials,
                                        args.seed, args.real_only, options);
    const auto& p = diamond_result.best_params;
    out << "diamond_distance "
        << format_number(fold_diamond(diamond_result.best_value,
                                      trace_result.best_value))
        << "\n";
    out << "diamond_argmax theta1 " << format_number(p[0]) << " theta2 "
        << format_number(p[1]) << " theta3 " << format_number(p[2]);
    if (!args.real_only) {
      out << " phi1 " << format_number(p[3]) << " phi2 " << format_number(p[4])
          << " phi3 " << format_number(p[5]);
    }
    out << "\n";
  } else {
    diamond_result =
        diamond_distance_k(s1.channel.kraus, s2.channel.kraus, args.trials,
                           args.seed, KitaevSampling::kMixedBloch, options);
    out << "diamond_distance "
        << format_number(fold_diamond(diamond_result.best_value,
                                      trace_result.best_value))
        << "\n";
    out << "diamond_argmax";
    if (diamond_result.best_params.empty()) {
      out << " none (identical channels)";
    } else {
      const auto& p = diamond_result.best_params;
      out << " theta_a " << format_number(p[0]) << " phi_a "
          << format_number(p[1]) << " r_a " << format_number(p[2])
          << " theta_b " << format_number(p[3]) << " phi_b "
          << format_number(p[4]) << " r_b " << format_number(p[5]);
    }
    out << "\n";
  }

  const double diamond =
      fold_diamond(diamond_result.best_value, trace_result.best_value);
  const ErrorProbabilities probs =
      error_probabilities(trace_result.best_value, diamond);
  out << "p_e_prime " << format_number(probs.p_e_prime) << "\n";
  out << "p_e " << format_number(probs.p_e) << "\n";
}

int run_dist(const DistArgs& args) {
  write_dist_report(args, std::cout);
  return kExitOk;
}

void write_sweep_csv(const SweepArgs& args, std::ostream& out) {
  const ChannelSpec base1 = parse_channel_spec(args.spec1);
  const ChannelSpec base2 = parse_channel_spec(args.spec2);
  if (args.algorithm != "f" && args.algorithm != "k") {
    throw std::invalid_argument("sweep: algorithm must be f or k, got '" +
                                args.algorithm + "'");
  }
  if (args.grids.empty()) {
    throw std::invalid_argument("sweep: at least one --grid is required");
  }
  std::vector<Grid> grids;
  for (const std::string& g : args.grids) grids.push_back(parse_grid(g));

  echo_common(out, "sweep", base1, base2, args.algorithm, args.trials,
              args.real_only);
  out << "# seed " << args.seed << "\n";
  for (const Grid& g : grids) {
    out << "# grid " << g.name << " " << format_number(g.start) << " "
        << format_number(g.stop) << " " << g.steps << "\n";
  }
  out << "# point_seed seed + point_index\n";

  std::vector<std::string> header;
  for (const Grid& g : grids) header.push_back(g.name);
  header.insert(header.end(),
                {"trace_distance", "diamond_distance", "difference"});
  write_csv_row(out, header);

  std::vector<int> index(grids.size(), 0);
  std::uint64_t point = 0;
  while (true) {
    ChannelSpec s1 = base1;
    ChannelSpec s2 = base2;
    std::vector<std::string> cells;
    for (std::size_t g = 0; g < grids.size(); ++g) {
      const double v = grids[g].value(index[g]);
      cells.push_back(format_number(v));
      if (grids[g].target == 1) {
        s1 = with_parameter(s1, grids[g].param, v);
      } else {
        s2 = with_parameter(s2, grids[g].param, v);
      }
    }
    const DistanceRow row =
        compute_pair(s1, s2, args.algorithm, args.trials, args.seed + point,
                     args.real_only, args.threads);
    cells.push_back(format_number(row.trace));
    cells.push_back(format_number(row.diamond));
    cells.push_back(format_number(row.diamond - row.trace));
    write_csv_row(out, cells);

    // Odometer increment, last grid fastest.
    int g = static_cast<int>(grids.size()) - 1;
    while (g >= 0 && ++index[g] == grids[g].steps) {
      index[g] = 0;
      --g;
    }
    if (g < 0) break;
    ++point;
  }
}

int run_sweep(const SweepArgs& args) {
  std::ofstream out = open_output(args.out_path);
  write_sweep_csv(args, out);
  return kExitOk;
}

void write_converge_csv(const ConvergeArgs& args, std::ostream& out) {
  if (args.self_test) {
    out << "# qchdist converge self-test\n";
    out << "# planted_exponent " << format_number(args.self_test_exponent)
        << "\n";
    out << "# trials " << args.trials << "\n";
    std::vector<std::pair<std::uint64_t, double>> trace;
    for (std::uint64_t n : trace_checkpoints(args.trials)) {
      trace.emplace_back(
          n, std::pow(static_cast<double>(n), args.self_test_exponent));
    }
    out << "n_r,delta\n";
    for (const auto& [n, delta] : trace) {
      write_csv_row(out, {std::to_string(n), format_number(delta)});
    }
    out << "# fitted_exponent " << format_number(fit_power_law(trace)) << "\n";
    return;
  }

  const ChannelSpec s1 = parse_channel_spec(args.spec1);
  const ChannelSpec s2 = parse_channel_spec(args.spec2);
  if (args.seeds < 1) {
    throw std::invalid_argument("converge: --seeds must be >= 1");
  }
  double reference = args.reference;
  if (args.auto_reference) {
    if (!s1.pauli_type || !s2.pauli_type) {
      throw std::invalid_argument(
          "converge: --auto needs two Pauli-type channels; pass --reference "
          "for kinds '" + s1.kind + "' vs '" + s2.kind + "'");
    }
    reference = pauli_diamond(s1.weights, s2.weights);
  } else if (!args.has_reference) {
    throw std::invalid_argument("converge: --reference or --auto is required");
  }

  echo_common(out, "converge", s1, s2, "f", args.trials, args.real_only);
  out << "# base_seed " << args.seed << "\n";
  out << "# seeds " << args.seeds << "\n";
  out << "# reference " << format_number(reference) << "\n";
  out << "seed,n_r,delta\n";

  std::vector<double> exponents;
  std::vector<std::string> footer;
  for (int k = 0; k < args.seeds; ++k) {
    const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(k);
    const SearchResult result =
        diamond_distance_f(s1.channel, s2.channel, args.trials, seed,
                           args.real_only, mc_options(args.threads));
    const auto deltas = convergence_error_trace(result, reference);
    for (const auto& [n, delta] : deltas) {
      write_csv_row(out, {std::to_string(seed), std::to_string(n),
                          format_number(delta)});
    }
    try {
      const double exponent = fit_power_law(deltas);
      exponents.push_back(exponent);
      footer.push_back("# exponent_seed_" + std::to_string(seed) + " " +
                       format_number(exponent));
    } catch (const std::invalid_argument& e) {
      footer.push_back("# exponent_seed_" + std::to_string(seed) +
                       " unavailable (" + e.what() + ")");
    }
  }
  for (const std::string& line : footer) out << line << "\n";
  if (exponents.empty()) {
    throw std::invalid_argument(
        "converge: no seed produced enough positive-delta points to fit");
  }
  std::sort(exponents.begin(), exponents.end());
  const std::size_t mid = exponents.size() / 2;
  const double median = exponents.size() % 2 == 1
                            ? exponents[mid]
                            : 0.5 * (exponents[mid - 1] + exponents[mid]);
  out << "# median_exponent " << format_number(median) << "\n";
}

int run_converge(const ConvergeArgs& args) {
  std::ofstream out = open_output(args.out_path);
  write_converge_csv(args, out);
  return kExitOk;
}

void write_bell_compare_csv(const BellCompareArgs& args, std::ostream& out) {
  if (args.steps < 2) {
    throw std::invalid_argument("bell-compare: --steps must be >= 2");
  }
  out << "# qchdist bell-compare\n";
  out << "# steps " << args.steps << "\n";
  out << "theta_z,trace_norm,bell_input_distance\n";
  const Channel identity = identity_channel();
  const DensityMatrix bell = maximally_entangled();
  for (int i = 0; i < args.steps; ++i) {
    const double theta = kHalfPi * i / double(args.steps - 1);
    const double sin_sq = std::sin(theta) * std::sin(theta);
    const Channel displaced = displacement_z(theta);
    const double bell_distance = distance_for_input(displaced, identity, bell);
    write_csv_row(out, {format_number(theta), format_number(2.0 * sin_sq),
                        format_number(bell_distance)});
  }
}

int run_bell_compare(const BellCompareArgs& args) {
  std::ofstream out = open_output(args.out_path);
  write_bell_compare_csv(args, out);
  return kExitOk;
}

}  // namespace qchdist::cli
