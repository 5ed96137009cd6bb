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

#include "cpdd/commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "cpdd/dsl.hpp"
#include "cpdd/io.hpp"
#include "cpdd/numsim.hpp"
#include "cpdd/sequence.hpp"
#include "cpdd/symbolic.hpp"

namespace cpdd::cli {

namespace {

constexpr double kH0BridgeTolerance = 1e-12;
constexpr double kH1BridgeTolerance = 1e-10;
// Numeric bridges are skipped above this many pulses.
constexpr std::size_t kMaxBridgePulses = 4096;

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    default:
      return "skipped";
  }
}

Check make_check(std::string name, bool ok, std::string detail,
                 std::optional<double> residual = std::nullopt) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail), residual};
}

Check skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::Skipped, std::move(why), std::nullopt};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string scientific(double v) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3) << v;
  return out.str();
}

numsim::SpinBathModel make_model(const ModelSpec& spec) {
  return numsim::build_model(spec.n_bath, spec.coupling, spec.beta, spec.seed);
}

std::string render_gen(const json& g) {
  std::ostringstream out;
  out << "expression  : " << g["expression"].get<std::string>() << '\n'
      << "pulses      : " << g["sequence"]["written_order"].get<std::string>()
      << "  (written order, last pulse first)\n"
      << "K           : " << g["sequence"]["K"] << '\n';
  const auto& cls = g["sequence"]["class"];
  if (cls.is_null()) {
    out << "class       : n/a (no projection provenance)\n";
  } else {
    out << "class       : {" << cls["n_x"] << ',' << cls["n_y"] << ',' << cls["n_z"] << "}\n"
        << "N           : " << cls["N"] << '\n';
  }
  out << "cyclic      : " << yes_no(g["sequence"]["cyclic"].get<bool>()) << '\n'
      << "odd sites   : " << yes_no(g["odd_sites"].get<bool>()) << '\n';
  if (g["half_repeat"].is_null()) {
    out << "half repeat : n/a (odd K)\n";
  } else {
    out << "half repeat : " << yes_no(g["half_repeat"].get<bool>()) << '\n';
  }
  return out.str();
}

std::string render_verify(const VerifyReport& r) {
  std::ostringstream out;
  out << "expression : " << r.expression << '\n'
      << "pulses     : " << r.written_order << '\n'
      << "H0bar      : " << r.h0_text << '\n'
      << "H1bar      : " << r.h1_text << '\n';
  for (const auto& c : r.checks) {
    out << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) {
      out << ": " << c.detail;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_slope(const json& s) {
  std::ostringstream out;
  out << "model: n_bath=" << s["model"]["n_bath"] << " J=" << s["model"]["J"]
      << " beta=" << s["model"]["beta"] << " seed=" << s["model"]["seed"] << '\n';
  out << std::left << std::setw(24) << "sequence" << std::setw(8) << "K" << std::setw(12) << "slope"
      << std::setw(12) << "N_est" << "residual\n";
  for (const auto& r : s["results"]) {
    out << std::left << std::setw(24) << r["sequence"].get<std::string>() << std::setw(8)
        << r["K"].get<std::size_t>() << std::setw(12) << std::fixed << std::setprecision(4)
        << r["slope"].get<double>() << std::setw(12) << r["N_est"].get<double>()
        << scientific(r["residual"].get<double>()) << '\n';
  }
  return out.str();
}

std::string render_catalog(const json& c) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "name" << std::setw(12) << "{nx,ny,nz}" << std::setw(24)
      << "pattern" << std::setw(10) << "K" << "N\n";
  for (const auto& r : c["schemes"]) {
    std::ostringstream cls;
    cls << '{' << r["class"][0] << ',' << r["class"][1] << ',' << r["class"][2] << '}';
    out << std::left << std::setw(14) << r["name"].get<std::string>() << std::setw(12) << cls.str()
        << std::setw(24) << r["pattern"].get<std::string>() << std::setw(10)
        << r["K"].get<std::uint64_t>() << r["N"] << '\n';
  }
  out << "\nK_min by suppression order:";
  for (const auto& k : c["k_min"]) {
    out << "  N=" << k["N"] << ":" << k["K"];
  }
  out << "\nOUDD classes:";
  for (const auto& o : c["oudd"]) {
    out << "  k=" << o["k"] << ":{" << o["class"][0] << ',' << o["class"][1] << ',' << o["class"][2]
        << '}';
  }
  out << '\n';
  return out.str();
}

std::string render_csv(const json& s) {
  std::vector<io::DistanceRow> rows;
  for (const auto& r : s["results"]) {
    for (const auto& p : r["points"]) {
      rows.push_back({r["sequence"].get<std::string>(), s["model"]["seed"].get<std::uint64_t>(),
                      s["model"]["n_bath"].get<int>(), s["model"]["J"].get<double>(),
                      s["model"]["beta"].get<double>(), p["tau_d"].get<double>(),
                      p["D"].get<double>()});
    }
  }
  std::ostringstream out;
  io::write_csv(out, rows);
  return out.str();
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv("DD_DEFAULT_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) {
        return v;
      }
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("DD_DEFAULT_SEED is not an unsigned integer: ") + env);
  }
  return ModelSpec{}.seed;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") {
    return Format::Text;
  }
  if (text == "json") {
    return Format::Json;
  }
  if (text == "csv") {
    return Format::Csv;
  }
  return std::nullopt;
}

json cmd_gen(std::string_view expr) {
  const PulseSequence seq = dsl::elaborate(expr);
  json out{{"expression", std::string(expr)}, {"sequence", io::to_json(seq)}};
  out["odd_sites"] = check_odd_sites(seq);
  out["half_repeat"] = seq.size() % 2 == 0 ? json(check_half_repeat(seq)) : json(nullptr);
  return out;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) {
      return false;
    }
  }
  return true;
}

json VerifyReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
    j["residual"] = c.residual ? json(*c.residual) : json(nullptr);
    checks_json.push_back(j);
  }
  return json{{"expression", expression},
              {"written_order", written_order},
              {"h0", h0},
              {"h0_text", h0_text},
              {"h1", h1},
              {"h1_text", h1_text},
              {"checks", checks_json},
              {"passed", passed()}};
}

VerifyReport cmd_verify(std::string_view expr, const ModelSpec& model_spec) {
  using namespace symbolic;
  const PulseSequence seq = dsl::elaborate(expr);
  const SBOperator h = h0_generic();

  VerifyReport report;
  report.expression = std::string(expr);
  report.written_order = seq.written_order();
  const SBOperator h0bar = avg_h0(toggling_frames(seq, h));
  const SBOperator h1bar = avg_h1(interval_frames(seq, h));
  report.h0_text = h0bar.str();
  report.h1_text = h1bar.str();
  report.h0 = io::to_json(h0bar);
  report.h1 = io::to_json(h1bar);

  const auto& prov = seq.provenance();
  const auto cyclic = is_cyclic(seq);
  if (prov) {
    const CpddClass cls = *seq.cpdd_class();
    report.checks.push_back(
        make_check("cyclic", cyclic.has_value(), "pulse product " + total_product(seq).str()));
    report.checks.push_back(make_check("projection-chain", h0bar == project_chain(*prov, h),
                                       "zeroth-order average equals the composed projections"));
    bool pattern = true;
    std::string survivors;
    for (PauliAxis a : kTransverseAxes) {
      const bool killed = h0bar[a].empty();
      pattern = pattern && (killed == (cls.order_along(a) >= 1));
      if (!killed) {
        survivors += std::string(survivors.empty() ? "" : ",") + "σ_" + axis_label(a);
      }
    }
    report.checks.push_back(make_check(
        "leading-order-pattern", pattern,
        "surviving system components: " + (survivors.empty() ? std::string("none") : survivors)));
    if (prov->size() >= 2) {
      const PulseSequence outer = projection(prov->back());
      const PulseSequence inner =
          cpdd_from_order(std::span<const PauliAxis>(prov->data(), prov->size() - 1));
      const bool same = concat(outer, inner).same_axes(seq);
      const bool lemma = same && verify_concatenation_lemma(outer, inner, h);
      report.checks.push_back(make_check(
          "concatenation-lemma", lemma,
          std::string("outer p_") + axis_label(prov->back()) + ", inner " + inner.written_order()));
    } else {
      report.checks.push_back(
          skipped("concatenation-lemma", "single projection, no inner sequence"));
    }
    report.checks.push_back(make_check("odd-sites", check_odd_sites(seq), ""));
    report.checks.push_back(make_check("half-repeat", check_half_repeat(seq), ""));
  } else {
    report.checks.push_back(skipped(
        "cyclic", std::string("no provenance; sequence is ") + (cyclic ? "" : "not ") + "cyclic"));
    report.checks.push_back(skipped("projection-chain", "no projection provenance"));
    report.checks.push_back(skipped("leading-order-pattern", "no projection provenance"));
    report.checks.push_back(skipped("concatenation-lemma", "no projection provenance"));
  }

  if (seq.size() > kMaxBridgePulses) {
    report.checks.push_back(skipped("numeric-h0-bridge", "sequence too long for dense bridge"));
    report.checks.push_back(skipped("numeric-h1-bridge", "sequence too long for dense bridge"));
  } else {
    const auto model = make_model(model_spec);
    const double r0 = numsim::numeric_check_h0(seq, model);
    report.checks.push_back(make_check("numeric-h0-bridge", r0 <= kH0BridgeTolerance,
                                       "relative residual " + scientific(r0), r0));
    const double tau = 1e-3 / model_spec.coupling;
    const double r1 = numsim::numeric_check_h1(seq, model, tau);
    report.checks.push_back(make_check("numeric-h1-bridge", r1 <= kH1BridgeTolerance,
                                       "relative residual " + scientific(r1), r1));
  }
  return report;
}

json cmd_slope(const std::vector<std::string>& exprs, const ModelSpec& model_spec,
               const GridSpec& grid_spec) {
  if (exprs.empty()) {
    throw std::invalid_argument("slope needs at least one --seq");
  }
  if (!(grid_spec.tau_min > 0) || !(grid_spec.tau_min < grid_spec.tau_max)) {
    throw std::invalid_argument("grid needs 0 < tau-min < tau-max");
  }
  if (grid_spec.points < 4) {
    throw std::invalid_argument("grid needs at least 4 points");
  }
  const auto model = make_model(model_spec);
  const auto grid = numsim::log_grid(grid_spec.tau_min, grid_spec.tau_max, grid_spec.points);

  json results = json::array();
  for (const auto& e : exprs) {
    const PulseSequence seq = dsl::elaborate(e);
    const auto est = numsim::estimate_order(seq, model, grid);
    json r = io::to_json(est);
    r["sequence"] = e;
    r["written_order"] = seq.written_order();
    r["K"] = seq.size();
    results.push_back(std::move(r));
  }
  return json{{"model",
               {{"n_bath", model_spec.n_bath},
                {"J", model_spec.coupling},
                {"beta", model_spec.beta},
                {"seed", model_spec.seed}}},
              {"grid",
               {{"tau_min", grid_spec.tau_min},
                {"tau_max", grid_spec.tau_max},
                {"points", grid_spec.points}}},
              {"results", results}};
}

json cmd_catalog() {
  json schemes = json::array();
  for (const auto& row : catalog()) {
    schemes.push_back(io::to_json(row));
  }
  json kmins = json::array();
  json oudds = json::array();
  for (int n = 1; n <= 6; ++n) {
    kmins.push_back({{"N", n}, {"K", k_min(n)}});
    const CpddClass c = oudd(n);
    oudds.push_back({{"k", n},
                     {"class", {c.n_x, c.n_y, c.n_z}},
                     {"K", c.pulse_count()},
                     {"N", c.suppression_order()}});
  }
  return json{{"schemes", schemes}, {"k_min", kmins}, {"oudd", oudds}};
}

CommandResult run(const RunConfig& config) {
  CommandResult result;
  try {
    if (config.command == "catalog") {
      const json c = cmd_catalog();
      result.output = config.format == Format::Json ? c.dump(2) + "\n" : render_catalog(c);
    } else if (config.command == "gen") {
      if (config.sequences.empty()) {
        throw std::invalid_argument("gen needs --seq");
      }
      json all = json::array();
      std::string text;
      for (const auto& e : config.sequences) {
        json g = cmd_gen(e);
        text += render_gen(g);
        all.push_back(std::move(g));
      }
      result.output =
          config.format == Format::Json ? (all.size() == 1 ? all[0] : all).dump(2) + "\n" : text;
    } else if (config.command == "verify") {
      if (config.sequences.empty()) {
        throw std::invalid_argument("verify needs --seq");
      }
      json all = json::array();
      std::string text;
      bool ok = true;
      for (const auto& e : config.sequences) {
        const VerifyReport r = cmd_verify(e, config.model);
        ok = ok && r.passed();
        text += render_verify(r);
        all.push_back(r.to_json());
      }
      result.output =
          config.format == Format::Json ? (all.size() == 1 ? all[0] : all).dump(2) + "\n" : text;
      result.exit_code = ok ? 0 : 1;
    } else if (config.command == "slope") {
      const json s = cmd_slope(config.sequences, config.model, config.grid);
      switch (config.format) {
        case Format::Json:
          result.output = s.dump(2) + "\n";
          break;
        case Format::Csv:
          result.output = render_csv(s);
          break;
        default:
          result.output = render_slope(s);
      }
    } else {
      throw std::invalid_argument("unknown command '" + config.command + "'");
    }
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.error = e.what();
  }
  return result;
}

}  // namespace cpdd::cli
