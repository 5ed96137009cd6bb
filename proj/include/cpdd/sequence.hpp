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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpdd/pauli.hpp"

namespace cpdd {

/// Thrown for malformed sequences and out-of-domain sequence-calculus inputs.
class SequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Projection counts {n_x, n_y, n_z} of a CPDD equivalence class.
struct CpddClass {
  int n_x = 0;
  int n_y = 0;
  int n_z = 0;

  friend constexpr bool operator==(const CpddClass&, const CpddClass&) = default;

  int count(PauliAxis axis) const;
  int total() const { return n_x + n_y + n_z; }
  /// K = 2^(n_x + n_y + n_z).
  std::uint64_t pulse_count() const;
  /// d_i: number of projections along axes orthogonal to `axis`.
  int order_along(PauliAxis axis) const;
  /// N = min(d_x, d_y, d_z).
  int suppression_order() const;

  std::string str() const;
};

/// Validates counts and returns the class. Throws SequenceError on negative
/// counts or when K would not fit in 64 bits.
CpddClass class_of(int n_x, int n_y, int n_z);

/// Time-ordered list of ideal pi pulses at uniform spacing.
///
/// pulses()[0] is applied first. The optional provenance lists the projection
/// axes it was concatenated from, innermost first (outermost last); when
/// present the sequence has exactly 2^provenance.size() pulses.
class PulseSequence {
 public:
  explicit PulseSequence(std::vector<PhasedPauli> pulses,
                         std::optional<std::vector<PauliAxis>> provenance = std::nullopt);

  /// Parses an axis string written in written order P_K...P_1 (last pulse first).
  static PulseSequence from_written_order(std::string_view text);

  const std::vector<PhasedPauli>& pulses() const { return pulses_; }
  const std::optional<std::vector<PauliAxis>>& provenance() const { return provenance_; }
  std::size_t size() const { return pulses_.size(); }
  const PhasedPauli& operator[](std::size_t i) const { return pulses_[i]; }

  std::vector<PauliAxis> axes() const;
  /// Class from the provenance counts; nullopt for sequences without provenance.
  std::optional<CpddClass> cpdd_class() const;

  /// Axis string in written order, e.g. "IZXZIZXZ". Phases are not printed.
  std::string written_order() const;
  /// Axis string in time order (first-applied first).
  std::string time_order() const;

  /// Same pulse axes (phases ignored).
  bool same_axes(const PulseSequence& other) const;

 private:
  std::vector<PhasedPauli> pulses_;
  std::optional<std::vector<PauliAxis>> provenance_;
};

/// p_i = P_i P_i. Rejects I.
PulseSequence projection(PauliAxis axis);

/// A[B]: every pulse of A is preceded by a full copy of B, with the A-pulse
/// fused (multiplied from the left) into the last pulse of its B block.
PulseSequence concat(const PulseSequence& outer, const PulseSequence& inner);

/// Ordered product P_K ... P_1 of all pulses.
PhasedPauli total_product(const PulseSequence& seq);

/// Phase e^{i phi} when the pulse product is proportional to the identity.
std::optional<Phase> is_cyclic(const PulseSequence& seq);

/// p_{i_N}[...[p_{i_1}]...] from the axes listed innermost first.
PulseSequence cpdd_from_order(std::span<const PauliAxis> order);
PulseSequence cpdd_from_order(std::initializer_list<PauliAxis> order);

/// Canonical representative of a class: x's innermost, then y's, then z's.
PulseSequence cpdd_from_class(const CpddClass& cls);
std::vector<PauliAxis> canonical_order(const CpddClass& cls);

/// Minimum pulse count reaching suppression order N >= 1: 2^ceil(3N/2).
std::uint64_t k_min(int order);

/// The minimal-pulse class of order k >= 1: {(k-m)/2, (k+m)/2, (k+m)/2}, m = k mod 2.
CpddClass oudd(int k);

/// Odd sites (1st, 3rd, ...) all carry the same pulse axis.
bool check_odd_sites(const PulseSequence& seq);
/// First and second halves have equal axes. Throws for odd K.
bool check_half_repeat(const PulseSequence& seq);

/// Class equality of two provenance-built sequences. Throws otherwise.
bool equivalent(const PulseSequence& a, const PulseSequence& b);

// Named schemes.
PulseSequence pdd();
PulseSequence cdd(int level);
PulseSequence ga8a();
PulseSequence ga8b();
PulseSequence ga8(int level);

/// Classes as listed in the scheme table, counts in ascending order. The
/// concrete cdd(l) uses x and y, so its class is a relabeling of cdd_class(l).
CpddClass cdd_class(int level);
CpddClass ga8_class(int level);

struct CatalogRow {
  std::string name;
  CpddClass cls;
  /// Structural pattern as printed in the scheme table.
  std::string pattern;
  /// Concrete written-order pulses for rows with K <= 64, empty otherwise.
  std::string example;
  std::uint64_t pulse_count = 0;
  int order = 0;
};

/// The known-scheme table: the generic rows followed by concrete CDD_l
/// (l <= max_cdd_level) and GA8_l (l <= max_ga8_level) instances.
std::vector<CatalogRow> catalog(int max_cdd_level = 4, int max_ga8_level = 3);

}  // namespace cpdd
