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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "fermsep/fermion_algebra.hpp"
#include "state_file.hpp"

namespace fermsep::cli {

namespace {

using nlohmann::json;

// Runs `body` against config.out when set, else against `fallback`.
int with_output(const RunConfig& config, std::ostream& fallback, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (config.out.empty()) return body(fallback);
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << config.out << "' for writing\n";
    return kIoError;
  }
  const int code = body(file);
  if (!file) {
    err << "error: failed writing '" << config.out << "'\n";
    return kIoError;
  }
  return code;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

void RunConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidArgument("--tol must be a positive number");
  }
  if (quad_points < xy::kMinQuadPoints || !is_power_of_two(quad_points)) {
    throw InvalidArgument("--quad-points must be a power of two >= 64");
  }
  if (workers < 1) throw InvalidArgument("--workers must be at least 1");
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad range '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw InvalidArgument("bad range '" + text + "'");
    return v;
  };
  if (parts.size() == 1) return {to_double(parts[0])};
  if (parts.size() != 3) throw InvalidArgument("range must be 'lo:hi:count' or a single value");
  const double lo = to_double(parts[0]);
  const double hi = to_double(parts[1]);
  const double count = to_double(parts[2]);
  if (count < 1 || count != std::floor(count)) throw InvalidArgument("range count must be a positive integer");
  const int n = static_cast<int>(count);
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
  out.back() = hi;
  return out;
}

json report_to_json(const classify::ClassificationReport& report, double ppt_witness) {
  json sets = json::object();
  for (const classify::SetVerdict& v : report.sets) {
    sets[std::string(classify::to_string(v.set))] = {
        {"verdict", std::string(classify::to_string(v.verdict))},
        {"witness", v.witness},
        {"tolerance", v.tolerance},
        {"criterion", std::string(classify::to_string(v.criterion))},
    };
  }
  return {{"modes_a", report.modes_a},   {"modes_b", report.modes_b},
          {"physical", report.physical}, {"parity_residual", report.parity_residual},
          {"ppt_witness", ppt_witness},  {"sets", sets}};
}

int cmd_classify(const std::string& path, const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  StateFile file;
  try {
    file = read_state_file(path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidState& e) {
    err << "invalid state: " << e.what() << '\n';
    return kInvalidState;
  }
  const double tol = file.tolerance.value_or(config.tolerance);
  const ModeBipartition split(file.modes_a, file.modes_b);
  json doc;
  try {
    const classify::ClassificationReport report =
        classify::classify(file.matrix, split, {tol, kMembershipTolerance});
    doc = report_to_json(report, classify::is_ppt(file.matrix, split, tol).witness);
  } catch (const InvalidState& e) {
    err << "invalid state: " << e.what() << '\n';
    return kInvalidState;
  }
  return with_output(config, out, err, [&](std::ostream& o) {
    o << doc.dump(2) << '\n';
    return kOk;
  });
}

int cmd_scan_xy(double lambda, const std::vector<double>& gammas, const std::vector<double>& betas,
                const RunConfig& config, std::ostream& out, std::ostream& err) {
  xy::ScanOptions options;
  options.quad_points = config.quad_points;
  options.workers = config.workers;
  options.tol = config.tolerance;
  const xy::ScanTable table = xy::scan_regions(lambda, gammas, betas, options);
  for (const xy::Boundary& b : table.boundaries) {
    err << "# gamma=" << b.gamma << " crossings=" << b.crossings.size()
        << (b.non_monotone ? " non-monotone" : "");
    for (double beta : b.crossings) err << ' ' << beta;
    err << '\n';
  }
  return with_output(config, out, err, [&](std::ostream& o) {
    xy::write_scan_csv(o, table);
    return kOk;
  });
}

int cmd_eof_curve(double lambda, double gamma, const std::vector<double>& betas,
                  const RunConfig& config, std::ostream& out, std::ostream& err) {
  xy::ScanOptions options;
  options.quad_points = config.quad_points;
  options.workers = config.workers;
  options.tol = config.tolerance;
  const std::vector<xy::EofRow> rows = xy::eof_curve(lambda, gamma, betas, options);
  for (const xy::EofRow& row : rows) {
    if (!row.converged) err << "warning: quadrature not converged at beta=" << row.beta << '\n';
  }
  return with_output(config, out, err, [&](std::ostream& o) {
    xy::write_eof_csv(o, rows);
    return kOk;
  });
}

int cmd_search(const SearchArgs& args, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  classify::SearchOptions options;
  options.seed = config.seed;
  options.max_iters = args.iterations;
  if (args.restrict_1x1) {
    options.modes_a = 1;
    options.modes_b = 1;
  }
  const classify::SearchResult result = classify::search_p1_nppt_counterexample(options);
  json report = {{"found", result.found},         {"iterations", result.iterations},
                 {"seed", config.seed},           {"modes_a", options.modes_a},
                 {"modes_b", options.modes_b},    {"min_violation", options.min_violation}};
  if (!result.found) {
    out << report.dump(2) << '\n';
    return kOk;
  }
  const ModeBipartition split(options.modes_a, options.modes_b);
  report["ppt_witness"] = result.ppt_witness;
  report["p1_residual"] = result.p1_residual;
  report["epsilon"] = result.epsilon;
  const auto classification = classify::classify(result.state, split, {config.tolerance, kMembershipTolerance});
  report["report"] = report_to_json(classification, result.ppt_witness);

  StateFile file;
  file.modes_a = options.modes_a;
  file.modes_b = options.modes_b;
  file.matrix = result.state;
  if (config.out.empty()) {
    report["state"] = state_file_to_json(file);
  } else {
    const int code = with_output(config, out, err, [&](std::ostream& o) {
      write_state_file(o, file);
      return kOk;
    });
    if (code != kOk) return code;
    report["state_file"] = config.out;
  }
  out << report.dump(2) << '\n';
  return kOk;
}

int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const std::vector<SuiteResult> suites = run_selftest(config);
  bool all = true;
  for (const SuiteResult& s : suites) {
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %s residual=%.3e threshold=%.3e", s.name.c_str(),
                  s.passed ? "PASS" : "FAIL", s.residual, s.threshold);
    out << line;
    if (!s.detail.empty()) out << ' ' << s.detail;
    out << '\n';
    all = all && s.passed;
  }
  out << "selftest: " << (all ? "PASS" : "FAIL") << '\n';
  return all ? kOk : kSelftestFailure;
}

}  // namespace fermsep::cli
