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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cpdd/commands.hpp"

namespace {

void add_model_flags(CLI::App* cmd, cpdd::cli::ModelSpec& model,
                     std::optional<std::uint64_t>& seed) {
  cmd->add_option("--n-bath", model.n_bath, "Number of bath spins (1-6)")->capture_default_str();
  cmd->add_option("--J", model.coupling, "System-bath coupling strength")->capture_default_str();
  cmd->add_option("--beta", model.beta, "Pure-bath Hamiltonian norm")->capture_default_str();
  cmd->add_option("--seed", seed, "Model RNG seed (default: DD_DEFAULT_SEED or 42)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concatenated projection decoupling: sequence generation and verification"};
  app.require_subcommand(1);

  cpdd::cli::RunConfig config;
  std::optional<std::uint64_t> seed;
  std::string format = "text";

  auto* gen = app.add_subcommand("gen", "Expand a sequence expression");
  auto* verify = app.add_subcommand("verify", "Symbolic averages and consistency checks");
  auto* slope = app.add_subcommand("slope", "Numeric distance scaling and order estimate");
  auto* catalog = app.add_subcommand("catalog", "Known-scheme table");

  for (auto* cmd : {gen, verify, slope}) {
    cmd->add_option("--seq", config.sequences, "Sequence expression (repeatable)")->required();
  }
  for (auto* cmd : {verify, slope}) {
    add_model_flags(cmd, config.model, seed);
  }
  slope->add_option("--tau-min", config.grid.tau_min, "Smallest pulse interval")
      ->capture_default_str();
  slope->add_option("--tau-max", config.grid.tau_max, "Largest pulse interval")
      ->capture_default_str();
  slope->add_option("--points", config.grid.points, "Log-spaced grid points")
      ->capture_default_str();
  for (auto* cmd : {gen, verify, slope, catalog}) {
    cmd->add_option("--out", config.out, "Write output to this file");
    cmd->add_option("--format", format, "text, json or csv (csv: slope only)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  }

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  config.format = *cpdd::cli::parse_format(format);
  if (config.format == cpdd::cli::Format::Csv && config.command != "slope") {
    std::cerr << "error: --format csv is only available for slope\n";
    return 2;
  }
  try {
    config.model.seed = cpdd::cli::resolve_seed(seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const auto result = cpdd::cli::run(config);
  if (!result.error.empty()) {
    std::cerr << "error: " << result.error << '\n';
  }
  if (config.out.empty()) {
    std::cout << result.output;
  } else if (!result.output.empty()) {
    std::ofstream file(config.out);
    if (!file) {
      std::cerr << "error: cannot open " << config.out << '\n';
      return 2;
    }
    file << result.output;
  }
  return result.exit_code;
}
