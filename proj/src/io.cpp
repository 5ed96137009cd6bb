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

#include "cpdd/io.hpp"

#include <iomanip>

namespace cpdd::io {

namespace {

std::string rational_text(const symbolic::Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += "/" + std::to_string(r.denominator());
  }
  return s;
}

std::string symbol_key(symbolic::BathSymbol s) {
  static constexpr std::array<const char*, 4> kKeys = {"B0", "Bx", "By", "Bz"};
  return kKeys[static_cast<std::size_t>(s)];
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const CpddClass& cls) {
  return json{{"n_x", cls.n_x},
              {"n_y", cls.n_y},
              {"n_z", cls.n_z},
              {"K", cls.pulse_count()},
              {"N", cls.suppression_order()},
              {"d",
               {cls.order_along(PauliAxis::X), cls.order_along(PauliAxis::Y),
                cls.order_along(PauliAxis::Z)}}};
}

json to_json(const PulseSequence& seq) {
  json pulses = json::array();
  for (const auto& p : seq.pulses()) {
    pulses.push_back(p.str());
  }
  json out{{"pulses", pulses}, {"written_order", seq.written_order()}, {"K", seq.size()}};
  if (const auto& prov = seq.provenance()) {
    json axes = json::array();
    for (PauliAxis a : *prov) {
      axes.push_back(std::string(1, axis_label(a)));
    }
    out["provenance"] = axes;
    const CpddClass cls = *seq.cpdd_class();
    out["class"] = to_json(cls);
    out["N"] = cls.suppression_order();
  } else {
    out["provenance"] = nullptr;
    out["class"] = nullptr;
    out["N"] = nullptr;
  }
  const auto phase = is_cyclic(seq);
  out["cyclic"] = phase.has_value();
  out["cycle_phase"] = phase ? json(std::string(phase->prefix()) + "1") : json(nullptr);
  return out;
}

json to_json(const symbolic::SBOperator& op) {
  json out = json::object();
  for (PauliAxis mu : kAllAxes) {
    json terms = json::array();
    for (const auto& [mono, c] : op[mu].terms()) {
      json word = json::array();
      for (auto s : mono.word) {
        word.push_back(symbol_key(s));
      }
      terms.push_back({{"re", rational_text(c.re)},
                       {"im", rational_text(c.im)},
                       {"grade", mono.grade},
                       {"word", word}});
    }
    out[std::string(1, axis_label(mu))] = terms;
  }
  return out;
}

json to_json(const numsim::SlopeEstimate& est) {
  json points = json::array();
  for (std::size_t k = 0; k < est.grid.size(); ++k) {
    points.push_back({{"tau_d", est.grid[k]}, {"D", est.distances[k]}});
  }
  return json{{"slope", est.slope},
              {"N_est", est.order_estimate},
              {"residual", est.residual},
              {"window", {est.window.front(), est.window.back()}},
              {"fitted_points", est.window.size()},
              {"points", points}};
}

json to_json(const CatalogRow& row) {
  return json{{"name", row.name},       {"class", {row.cls.n_x, row.cls.n_y, row.cls.n_z}},
              {"pattern", row.pattern}, {"example", row.example},
              {"K", row.pulse_count},   {"N", row.order}};
}

void write_csv(std::ostream& out, const std::vector<DistanceRow>& rows) {
  out << "sequence,seed,n_bath,J,beta,tau_d,D\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const auto& r : rows) {
    out << csv_field(r.sequence) << ',' << r.seed << ',' << r.n_bath << ',' << r.coupling << ','
        << r.beta << ',' << r.tau_d << ',' << r.distance << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace cpdd::io
