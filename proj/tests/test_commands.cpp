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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cpdd/commands.hpp"

namespace cpdd::cli {
namespace {

const Check& find_check(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) {
      return c;
    }
  }
  throw std::out_of_range(name);
}

TEST(Gen, Examples) {
  const auto o = cmd_gen("oudd(3)");
  EXPECT_EQ(o["sequence"]["class"]["n_x"], 1);
  EXPECT_EQ(o["sequence"]["class"]["n_y"], 2);
  EXPECT_EQ(o["sequence"]["class"]["n_z"], 2);
  EXPECT_EQ(o["sequence"]["K"], 32);
  EXPECT_EQ(o["sequence"]["N"], 3);
  const auto g = cmd_gen("ga8a");
  EXPECT_EQ(g["sequence"]["K"], 8);
  EXPECT_EQ(g["sequence"]["N"], 2);
  EXPECT_EQ(g["sequence"]["written_order"], "IZXZIZXZ");
  EXPECT_EQ(g["sequence"]["cyclic"], true);
  EXPECT_EQ(g["odd_sites"], true);
  EXPECT_EQ(g["half_repeat"], true);
  const auto p = cmd_gen("pz");
  EXPECT_EQ(p["sequence"]["K"], 2);
  EXPECT_EQ(p["sequence"]["N"], 0);
}

TEST(Gen, LiteralWithoutProvenance) {
  const auto o = cmd_gen("XYZ");
  EXPECT_TRUE(o["sequence"]["class"].is_null());
  EXPECT_TRUE(o["half_repeat"].is_null());
  EXPECT_EQ(o["sequence"]["pulses"], (json{"Z", "Y", "X"}));
}

TEST(Verify, ConcatenatedProjections) {
  const auto r = cmd_verify("px[py]", ModelSpec{3, 1.0, 1.0, 42});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(find_check(r, "concatenation-lemma").status, CheckStatus::Pass);
  EXPECT_EQ(r.h0_text, "1⊗[B_0]");
  EXPECT_EQ(find_check(r, "numeric-h0-bridge").status, CheckStatus::Pass);
  EXPECT_LE(*find_check(r, "numeric-h0-bridge").residual, 1e-12);
}

TEST(Verify, SingleProjection) {
  const auto r = cmd_verify("pz", ModelSpec{3, 1.0, 1.0, 42});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.h0_text, "1⊗[B_0] + σ_z⊗[B_z]");
  EXPECT_EQ(find_check(r, "concatenation-lemma").status, CheckStatus::Skipped);
}

TEST(Verify, LiteralSkipsProvenanceChecks) {
  const auto r = cmd_verify("ZY", ModelSpec{3, 1.0, 1.0, 42});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(find_check(r, "concatenation-lemma").status, CheckStatus::Skipped);
  EXPECT_EQ(find_check(r, "projection-chain").status, CheckStatus::Skipped);
  EXPECT_EQ(find_check(r, "numeric-h0-bridge").status, CheckStatus::Pass);
  const json j = r.to_json();
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["h0"]["1"][0]["word"], (json{"B0"}));
}

TEST(Slope, Summary) {
  const auto s = cmd_slope({"ga8a", "ga8b", "pdd"}, ModelSpec{}, GridSpec{});
  ASSERT_EQ(s["results"].size(), 3U);
  const double a = s["results"][0]["N_est"];
  const double b = s["results"][1]["N_est"];
  EXPECT_GE(a - b, 0.7);
  EXPECT_NEAR(s["results"][2]["N_est"].get<double>(), 1.0, 0.2);
  EXPECT_EQ(s["results"][0]["points"].size(), 12U);
}

TEST(Slope, Validation) {
  EXPECT_THROW(cmd_slope({}, ModelSpec{}, GridSpec{}), std::invalid_argument);
  EXPECT_THROW(cmd_slope({"pdd"}, ModelSpec{}, GridSpec{1e-2, 1e-3, 12}), std::invalid_argument);
  EXPECT_THROW(cmd_slope({"pdd"}, ModelSpec{}, GridSpec{1e-3, 1e-2, 3}), std::invalid_argument);
}

TEST(Catalog, Content) {
  const auto c = cmd_catalog();
  bool saw_ga8a = false;
  for (const auto& r : c["schemes"]) {
    if (r["name"] == "GA8_a") {
      saw_ga8a = true;
      EXPECT_EQ(r["class"], (json{1, 1, 1}));
      EXPECT_EQ(r["K"], 8);
      EXPECT_EQ(r["N"], 2);
    }
    if (r["name"] == "CDD_3") {
      EXPECT_EQ(r["K"], 64);
      EXPECT_EQ(r["N"], 3);
    }
  }
  EXPECT_TRUE(saw_ga8a);
  const std::vector<int> series{4, 8, 32, 64, 256};
  for (std::size_t n = 0; n < series.size(); ++n) {
    EXPECT_EQ(c["k_min"][n]["K"], series[n]);
  }
}

TEST(Run, ExitCodesAndFormats) {
  RunConfig cfg;
  cfg.command = "gen";
  cfg.sequences = {"px["};
  auto r = run(cfg);
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.error.find("offset 3"), std::string::npos);

  cfg.sequences = {"ga8a"};
  cfg.format = Format::Json;
  r = run(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.output)["sequence"]["K"], 8);

  cfg.command = "slope";
  cfg.sequences = {"pdd"};
  cfg.format = Format::Csv;
  cfg.grid.points = 4;
  r = run(cfg);
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "sequence,seed,n_bath,J,beta,tau_d,D");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    EXPECT_EQ(line.rfind("pdd,42,4,", 0), 0U) << line;
  }
  EXPECT_EQ(rows, 4);

  cfg.command = "verify";
  cfg.format = Format::Text;
  r = run(cfg);
  EXPECT_EQ(r.exit_code, 0);

  cfg.command = "nope";
  EXPECT_NE(run(cfg).exit_code, 0);
}

TEST(Run, Deterministic) {
  RunConfig cfg;
  cfg.command = "slope";
  cfg.sequences = {"ga8b"};
  cfg.format = Format::Json;
  EXPECT_EQ(run(cfg).output, run(cfg).output);
}

TEST(Seed, Resolution) {
  EXPECT_EQ(resolve_seed(7), 7U);
  ::unsetenv("DD_DEFAULT_SEED");
  EXPECT_EQ(resolve_seed(std::nullopt), 42U);
  ::setenv("DD_DEFAULT_SEED", "123", 1);
  EXPECT_EQ(resolve_seed(std::nullopt), 123U);
  EXPECT_EQ(resolve_seed(5), 5U);
  ::setenv("DD_DEFAULT_SEED", "abc", 1);
  EXPECT_THROW(resolve_seed(std::nullopt), std::invalid_argument);
  ::unsetenv("DD_DEFAULT_SEED");
}

TEST(Format, Parsing) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("text"), Format::Text);
  EXPECT_FALSE(parse_format("xml").has_value());
}

}  // namespace
}  // namespace cpdd::cli
