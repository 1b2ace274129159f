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

#include "state_file.hpp"

#include <fstream>
#include <ostream>

#include "fermsep/linalg.hpp"

namespace fermsep::cli {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("state file: missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

Complex parse_entry(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError("state file: matrix entries must be [re, im] pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

StateFile state_file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state file: top level must be an object");
  StateFile out;
  out.version = require_int(j, "version");
  if (out.version != kStateFileVersion) {
    throw ParseError("state file: unsupported version " + std::to_string(out.version));
  }
  out.modes_a = require_int(j, "modes_a");
  out.modes_b = require_int(j, "modes_b");
  if (out.modes_a < 1 || out.modes_b < 1 || out.modes_a + out.modes_b > kMaxModes) {
    throw ParseError("state file: mode counts out of range");
  }
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number() || !(j.at("tolerance").get<double>() > 0.0)) {
      throw ParseError("state file: tolerance must be a positive number");
    }
    out.tolerance = j.at("tolerance").get<double>();
  }
  if (!j.contains("matrix") || !j.at("matrix").is_array()) {
    throw ParseError("state file: missing 'matrix'");
  }
  const json& rows = j.at("matrix");
  const auto dim = static_cast<std::size_t>(1) << (out.modes_a + out.modes_b);
  if (rows.size() != dim) throw ParseError("state file: matrix has the wrong number of rows");
  out.matrix.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim) {
      throw ParseError("state file: matrix row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_entry(rows[r][c]);
    }
  }
  const double tol = out.tolerance.value_or(kDefaultTolerance);
  if (!linalg::is_hermitian(out.matrix, tol)) {
    throw InvalidState("state file: matrix is not Hermitian within tolerance");
  }
  return out;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return state_file_from_json(j);
}

json state_file_to_json(const StateFile& file) {
  json matrix = json::array();
  for (Eigen::Index r = 0; r < file.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < file.matrix.cols(); ++c) {
      row.push_back({file.matrix(r, c).real(), file.matrix(r, c).imag()});
    }
    matrix.push_back(std::move(row));
  }
  json out = {{"version", file.version}, {"modes_a", file.modes_a}, {"modes_b", file.modes_b}};
  if (file.tolerance) out["tolerance"] = *file.tolerance;
  out["matrix"] = std::move(matrix);
  return out;
}

void write_state_file(std::ostream& out, const StateFile& file) {
  out << state_file_to_json(file).dump(2) << '\n';
}

}  // namespace fermsep::cli
