// Copyright 2026 The cpdd Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cpdd::cli {

using nlohmann::json;

struct ModelSpec {
  int n_bath = 4;
  double coupling = 1.0;
  double beta = 1.0;
  std::uint64_t seed = 42;
};

/// Pulse-interval grid, log-spaced.
struct GridSpec {
  double tau_min = 1e-3;
  double tau_max = 3e-2;
  int points = 12;
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::vector<std::string> sequences;
  ModelSpec model;
  GridSpec grid;
  std::string out;  // empty: stdout
  Format format = Format::Text;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

/// Seed from --seed, else DD_DEFAULT_SEED, else 42.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

std::optional<Format> parse_format(std::string_view text);

/// Sequence summary: pulses, K, class, N, cyclicity, structural flags.
json cmd_gen(std::string_view expr);

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  std::optional<double> residual;
};

struct VerifyReport {
  std::string expression;
  std::string written_order;
  std::string h0_text;
  std::string h1_text;
  json h0;
  json h1;
  std::vector<Check> checks;

  bool passed() const;
  json to_json() const;
};

/// Symbolic averages plus the projection-chain, concatenation-lemma and numeric-bridge
/// checks that apply to the sequence. Checks whose preconditions fail are
/// reported as skipped and the run continues.
VerifyReport cmd_verify(std::string_view expr, const ModelSpec& model);

/// Slope fits for each expression on one shared model.
json cmd_slope(const std::vector<std::string>& exprs, const ModelSpec& model, const GridSpec& grid);

/// Scheme table with computed K and N, the K_min series and OUDD classes.
json cmd_catalog();

/// Dispatches a full run and renders output in the requested format.
CommandResult run(const RunConfig& config);

}  // namespace cpdd::cli
