// Copyright 2026 The fermsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common_flags(CLI::App& app, fermsep::cli::RunConfig& config) {
  app.add_option("--tol", config.tolerance, "Numerical tolerance")->capture_default_str();
  app.add_option("--quad-points", config.quad_points, "Quadrature points (power of two >= 64)")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "64-bit random seed")->capture_default_str();
  app.add_option("--workers", config.workers, "Worker threads for scans")->capture_default_str();
  app.add_option("--out", config.out, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fermsep::cli;
  CLI::App app{"Fermionic separability toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  std::string state_path;
  auto* classify = app.add_subcommand("classify", "Classify a state file (JSON report)");
  classify->add_option("file", state_path, "State file")->required();
  add_common_flags(*classify, config);

  double lambda = 0.5;
  std::string gamma_range = "0.05:1:20";
  std::string beta_range = "0:10:41";
  auto* scan = app.add_subcommand("scan-xy", "Separability regions of the XY-chain two-site state (CSV)");
  scan->add_option("--lambda", lambda, "Transverse field")->capture_default_str();
  scan->add_option("--gamma", gamma_range, "Anisotropy range lo:hi:count")->capture_default_str();
  scan->add_option("--beta", beta_range, "Inverse temperature range lo:hi:count")->capture_default_str();
  add_common_flags(*scan, config);

  double gamma = 0.5;
  auto* curve = app.add_subcommand("eof-curve", "E_F and parity-constrained E_F versus beta (CSV)");
  curve->add_option("--lambda", lambda, "Transverse field")->capture_default_str();
  curve->add_option("--gamma", gamma, "Anisotropy")->capture_default_str();
  curve->add_option("--beta", beta_range, "Inverse temperature range lo:hi:count")->capture_default_str();
  add_common_flags(*curve, config);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search for a P1 state with a non-positive partial transpose");
  search->add_option("--iters", search_args.iterations, "Maximum iterations")->capture_default_str();
  search->add_flag("--restrict-1x1", search_args.restrict_1x1, "Search 1x1-mode states instead of 2x2");
  add_common_flags(*search, config);

  auto* selftest = app.add_subcommand("selftest", "Run the oracle cross-checks");
  add_common_flags(*selftest, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  try {
    config.validate();
    if (classify->parsed()) return cmd_classify(state_path, config, std::cout, std::cerr);
    if (scan->parsed()) {
      return cmd_scan_xy(lambda, parse_range(gamma_range), parse_range(beta_range), config, std::cout,
                         std::cerr);
    }
    if (curve->parsed()) {
      return cmd_eof_curve(lambda, gamma, parse_range(beta_range), config, std::cout, std::cerr);
    }
    if (search->parsed()) return cmd_search(search_args, config, std::cout, std::cerr);
    if (selftest->parsed()) return cmd_selftest(config, std::cout, std::cerr);
  } catch (const fermsep::InvalidState& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kInvalidState;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kIoError;
}
