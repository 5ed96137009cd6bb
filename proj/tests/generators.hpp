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

#include <random>
#include <vector>

#include "cpdd/pauli.hpp"
#include "cpdd/sequence.hpp"

namespace cpdd::testing {

using Rng = std::mt19937_64;

inline PauliAxis random_axis(Rng& rng, bool allow_identity = true) {
  std::uniform_int_distribution<int> pick(allow_identity ? 0 : 1, 3);
  return static_cast<PauliAxis>(pick(rng));
}

/// Projection axes, innermost first, of length in [lo, hi].
inline std::vector<PauliAxis> random_order(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> len(lo, hi);
  std::vector<PauliAxis> order(static_cast<std::size_t>(len(rng)));
  for (auto& a : order) {
    a = random_axis(rng, false);
  }
  return order;
}

inline PulseSequence random_provenance_sequence(Rng& rng, int lo, int hi) {
  return cpdd_from_order(random_order(rng, lo, hi));
}

/// Arbitrary pulse list without provenance, phases included.
inline PulseSequence random_pulses(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> len(lo, hi);
  std::uniform_int_distribution<int> phase(0, 3);
  std::vector<PhasedPauli> pulses(static_cast<std::size_t>(len(rng)));
  for (auto& p : pulses) {
    p = PhasedPauli(Phase::from_power(phase(rng)), random_axis(rng));
  }
  return PulseSequence(std::move(pulses));
}

/// Random pulse list whose last pulse is chosen to make the whole product
/// proportional to the identity.
inline PulseSequence random_cyclic(Rng& rng, int lo, int hi) {
  std::vector<PhasedPauli> pulses = random_pulses(rng, lo, hi).pulses();
  const std::size_t last = pulses.size() - 1;
  pulses[last] = PhasedPauli();
  const PhasedPauli rest = total_product(PulseSequence(pulses));
  pulses[last] = PhasedPauli(rest.axis);
  return PulseSequence(std::move(pulses));
}

}  // namespace cpdd::testing
