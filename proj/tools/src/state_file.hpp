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

// JSON state files, schema version 1:
//
//   {"version": 1, "modes_a": 1, "modes_b": 1, "tolerance": 1e-9,
//    "matrix": [[[re, im], ...], ...]}
//
// "tolerance" is optional.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fermsep/types.hpp"

namespace fermsep::cli {

inline constexpr int kStateFileVersion = 1;

/// Malformed or unreadable input; maps to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateFile {
  int version = kStateFileVersion;
  int modes_a = 1;
  int modes_b = 1;
  std::optional<double> tolerance;
  DensityMatrix matrix;
};

/// Throws ParseError on schema violations and InvalidState when the matrix is
/// not Hermitian within the declared (or default) tolerance.
StateFile state_file_from_json(const nlohmann::json& j);
StateFile read_state_file(const std::string& path);

nlohmann::json state_file_to_json(const StateFile& file);
void write_state_file(std::ostream& out, const StateFile& file);

}  // namespace fermsep::cli
