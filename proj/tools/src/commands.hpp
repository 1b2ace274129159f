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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermsep/classification.hpp"
#include "fermsep/xychain.hpp"

namespace fermsep::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kInvalidState = 2,
  kSelftestFailure = 3,
};

struct RunConfig {
  double tolerance = kDefaultTolerance;
  int quad_points = xy::kDefaultQuadPoints;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out;  // empty: standard output

  /// Throws InvalidArgument on tolerance <= 0, a bad quadrature size or
  /// workers < 1.
  void validate() const;
};

/// "lo:hi:count" (inclusive, evenly spaced) or a single value.
std::vector<double> parse_range(const std::string& text);

nlohmann::json report_to_json(const classify::ClassificationReport& report, double ppt_witness);

/// Each command writes its primary output to `out` and diagnostics to `err`
/// and returns an ExitCode. When config.out is set, the primary output goes
/// to that file instead.
int cmd_classify(const std::string& path, const RunConfig& config, std::ostream& out,
                 std::ostream& err);

int cmd_scan_xy(double lambda, const std::vector<double>& gammas, const std::vector<double>& betas,
                const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_eof_curve(double lambda, double gamma, const std::vector<double>& betas,
                  const RunConfig& config, std::ostream& out, std::ostream& err);

struct SearchArgs {
  std::uint64_t iterations = 100000;
  bool restrict_1x1 = false;
};

/// Prints a JSON report. When a state is found and config.out is set, the
/// state is written there as a state file; otherwise it is embedded in the
/// report.
int cmd_search(const SearchArgs& args, const RunConfig& config, std::ostream& out,
               std::ostream& err);

struct SuiteResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// Oracle cross-checks. Each suite compares against config.tolerance times a
/// per-suite factor; the quadrature suite also requires convergence at the
/// configured grid without adaptive refinement.
std::vector<SuiteResult> run_selftest(const RunConfig& config);

int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fermsep::cli
