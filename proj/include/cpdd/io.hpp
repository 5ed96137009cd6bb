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

#include <ostream>
#include <string>
#include <vector>

#include "cpdd/numsim.hpp"
#include "cpdd/sequence.hpp"
#include "cpdd/symbolic.hpp"
#include "json.hpp"

namespace cpdd::io {

using nlohmann::json;

json to_json(const CpddClass& cls);

/// {pulses (time order, with phase prefixes), written_order, provenance, class, K, N, cyclic}.
/// provenance, class and N are null for sequences without provenance.
json to_json(const PulseSequence& seq);

/// Coefficient maps per component: {"1": [...], "x": [...], "y": [...], "z": [...]},
/// each term {"re": "p/q", "im": "p/q", "grade": g, "word": ["B0", ...]}.
json to_json(const symbolic::SBOperator& op);

json to_json(const numsim::SlopeEstimate& est);

json to_json(const CatalogRow& row);

struct DistanceRow {
  std::string sequence;
  std::uint64_t seed = 0;
  int n_bath = 0;
  double coupling = 0;
  double beta = 0;
  double tau_d = 0;
  double distance = 0;
};

/// Header "sequence,seed,n_bath,J,beta,tau_d,D" followed by one line per row.
void write_csv(std::ostream& out, const std::vector<DistanceRow>& rows);

}  // namespace cpdd::io
