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

#include "cpdd/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace cpdd {

namespace {

constexpr int kMaxTotalProjections = 62;

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw SequenceError(what);
  }
}

std::optional<std::vector<PauliAxis>> joined(const std::optional<std::vector<PauliAxis>>& inner,
                                             const std::optional<std::vector<PauliAxis>>& outer) {
  if (!inner || !outer) {
    return std::nullopt;
  }
  std::vector<PauliAxis> out = *inner;
  out.insert(out.end(), outer->begin(), outer->end());
  return out;
}

}  // namespace

int CpddClass::count(PauliAxis axis) const {
  switch (axis) {
    case PauliAxis::X:
      return n_x;
    case PauliAxis::Y:
      return n_y;
    case PauliAxis::Z:
      return n_z;
    default:
      return 0;
  }
}

std::uint64_t CpddClass::pulse_count() const {
  require(total() <= kMaxTotalProjections, "pulse count exceeds 64-bit range");
  return std::uint64_t{1} << total();
}

int CpddClass::order_along(PauliAxis axis) const {
  if (axis == PauliAxis::I) {
    return 0;
  }
  return total() - count(axis);
}

int CpddClass::suppression_order() const { return std::min({n_y + n_z, n_x + n_z, n_x + n_y}); }

std::string CpddClass::str() const {
  std::ostringstream out;
  out << '{' << n_x << ',' << n_y << ',' << n_z << '}';
  return out.str();
}

CpddClass class_of(int n_x, int n_y, int n_z) {
  require(n_x >= 0 && n_y >= 0 && n_z >= 0, "projection counts must be non-negative");
  require(n_x + n_y + n_z <= kMaxTotalProjections, "pulse count exceeds 64-bit range");
  return {n_x, n_y, n_z};
}

PulseSequence::PulseSequence(std::vector<PhasedPauli> pulses,
                             std::optional<std::vector<PauliAxis>> provenance)
    : pulses_(std::move(pulses)), provenance_(std::move(provenance)) {
  require(!pulses_.empty(), "a pulse sequence needs at least one pulse");
  if (provenance_) {
    for (PauliAxis a : *provenance_) {
      require(a != PauliAxis::I, "provenance axes must be x, y or z");
    }
    require(provenance_->size() < 64 && (std::size_t{1} << provenance_->size()) == pulses_.size(),
            "provenance of length n requires 2^n pulses");
  }
}

PulseSequence PulseSequence::from_written_order(std::string_view text) {
  std::vector<PhasedPauli> pulses;
  pulses.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    auto axis = axis_from_char(*it);
    require(axis.has_value(), std::string("invalid pulse character '") + *it + "'");
    pulses.emplace_back(*axis);
  }
  return PulseSequence(std::move(pulses));
}

std::vector<PauliAxis> PulseSequence::axes() const {
  std::vector<PauliAxis> out;
  out.reserve(pulses_.size());
  for (const auto& p : pulses_) {
    out.push_back(p.axis);
  }
  return out;
}

std::optional<CpddClass> PulseSequence::cpdd_class() const {
  if (!provenance_) {
    return std::nullopt;
  }
  CpddClass c;
  for (PauliAxis a : *provenance_) {
    c.n_x += a == PauliAxis::X;
    c.n_y += a == PauliAxis::Y;
    c.n_z += a == PauliAxis::Z;
  }
  return c;
}

std::string PulseSequence::written_order() const {
  std::string out;
  out.reserve(pulses_.size());
  for (auto it = pulses_.rbegin(); it != pulses_.rend(); ++it) {
    out.push_back(axis_char(it->axis));
  }
  return out;
}

std::string PulseSequence::time_order() const {
  std::string out;
  out.reserve(pulses_.size());
  for (const auto& p : pulses_) {
    out.push_back(axis_char(p.axis));
  }
  return out;
}

bool PulseSequence::same_axes(const PulseSequence& other) const {
  return std::equal(pulses_.begin(), pulses_.end(), other.pulses_.begin(), other.pulses_.end(),
                    [](const PhasedPauli& a, const PhasedPauli& b) { return a.axis == b.axis; });
}

PulseSequence projection(PauliAxis axis) {
  require(axis != PauliAxis::I, "a projection needs a non-identity axis");
  return PulseSequence({PhasedPauli(axis), PhasedPauli(axis)}, std::vector<PauliAxis>{axis});
}

PulseSequence concat(const PulseSequence& outer, const PulseSequence& inner) {
  const auto& a = outer.pulses();
  const auto& b = inner.pulses();
  std::vector<PhasedPauli> pulses;
  pulses.reserve(a.size() * b.size());
  for (const auto& ai : a) {
    pulses.insert(pulses.end(), b.begin(), b.end() - 1);
    pulses.push_back(mul(ai, b.back()));
  }
  return PulseSequence(std::move(pulses), joined(inner.provenance(), outer.provenance()));
}

PhasedPauli total_product(const PulseSequence& seq) {
  PhasedPauli acc;
  for (const auto& p : seq.pulses()) {
    acc = mul(p, acc);
  }
  return acc;
}

std::optional<Phase> is_cyclic(const PulseSequence& seq) {
  const PhasedPauli prod = total_product(seq);
  if (prod.axis != PauliAxis::I) {
    return std::nullopt;
  }
  return prod.phase;
}

PulseSequence cpdd_from_order(std::span<const PauliAxis> order) {
  require(!order.empty(), "a CPDD order needs at least one projection");
  PulseSequence seq = projection(order.front());
  for (PauliAxis axis : order.subspan(1)) {
    seq = concat(projection(axis), seq);
  }
  return seq;
}

PulseSequence cpdd_from_order(std::initializer_list<PauliAxis> order) {
  return cpdd_from_order(std::span<const PauliAxis>(order.begin(), order.size()));
}

std::vector<PauliAxis> canonical_order(const CpddClass& cls) {
  std::vector<PauliAxis> order;
  order.insert(order.end(), static_cast<std::size_t>(cls.n_x), PauliAxis::X);
  order.insert(order.end(), static_cast<std::size_t>(cls.n_y), PauliAxis::Y);
  order.insert(order.end(), static_cast<std::size_t>(cls.n_z), PauliAxis::Z);
  return order;
}

PulseSequence cpdd_from_class(const CpddClass& cls) {
  return cpdd_from_order(canonical_order(cls));
}

std::uint64_t k_min(int order) {
  require(order >= 1, "k_min is defined for suppression order >= 1");
  const int exponent = (3 * order + 1) / 2;
  require(exponent <= kMaxTotalProjections, "k_min exceeds 64-bit range");
  return std::uint64_t{1} << exponent;
}

CpddClass oudd(int k) {
  require(k >= 1, "OUDD order must be >= 1");
  const int m = k % 2;
  return class_of((k - m) / 2, (k + m) / 2, (k + m) / 2);
}

bool check_odd_sites(const PulseSequence& seq) {
  const PauliAxis first = seq[0].axis;
  for (std::size_t i = 2; i < seq.size(); i += 2) {
    if (seq[i].axis != first) {
      return false;
    }
  }
  return true;
}

bool check_half_repeat(const PulseSequence& seq) {
  require(seq.size() % 2 == 0, "half-repeat check needs an even pulse count");
  const std::size_t half = seq.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (seq[i].axis != seq[i + half].axis) {
      return false;
    }
  }
  return true;
}

bool equivalent(const PulseSequence& a, const PulseSequence& b) {
  auto ca = a.cpdd_class();
  auto cb = b.cpdd_class();
  require(ca && cb, "equivalence is defined only for CPDD-built sequences");
  return *ca == *cb;
}

PulseSequence pdd() { return cpdd_from_order({PauliAxis::Y, PauliAxis::X}); }

PulseSequence cdd(int level) {
  require(level >= 1, "CDD level must be >= 1");
  PulseSequence seq = pdd();
  for (int l = 2; l <= level; ++l) {
    seq = concat(pdd(), seq);
  }
  return seq;
}

PulseSequence ga8a() { return cpdd_from_order({PauliAxis::Z, PauliAxis::Y, PauliAxis::X}); }

PulseSequence ga8b() { return cpdd_from_order({PauliAxis::Y, PauliAxis::Z, PauliAxis::Z}); }

PulseSequence ga8(int level) {
  require(level >= 1, "GA8 level must be >= 1");
  PulseSequence seq = ga8a();
  for (int l = 2; l <= level; ++l) {
    seq = concat(ga8a(), seq);
  }
  return seq;
}

CpddClass cdd_class(int level) {
  require(level >= 1, "CDD level must be >= 1");
  return class_of(0, level, level);
}

CpddClass ga8_class(int level) {
  require(level >= 1, "GA8 level must be >= 1");
  return class_of(level, level, level);
}

std::vector<CatalogRow> catalog(int max_cdd_level, int max_ga8_level) {
  constexpr std::uint64_t kExampleLimit = 64;
  auto row = [&](std::string name, CpddClass cls, std::string pattern,
                 const std::optional<PulseSequence>& seq) {
    CatalogRow r{std::move(name),        cls, std::move(pattern), {}, cls.pulse_count(),
                 cls.suppression_order()};
    if (seq && r.pulse_count <= kExampleLimit) {
      r.example = seq->written_order();
    }
    return r;
  };

  std::vector<CatalogRow> rows;
  rows.push_back(row("Projection", class_of(0, 0, 1), "P_iP_i", projection(PauliAxis::Z)));
  rows.push_back(row("PDD(CDD_1)", class_of(0, 1, 1), "P_iP_jP_iP_j", pdd()));
  rows.push_back(row("GA8_a", class_of(1, 1, 1), "IP_iP_jP_iIP_iP_jP_i", ga8a()));
  for (int l = 1; l <= max_cdd_level; ++l) {
    std::string pattern = l == 1 ? "P_iP_jP_iP_j" : "CDD[CDD_" + std::to_string(l - 1) + "]";
    std::optional<PulseSequence> seq;
    if (cdd_class(l).pulse_count() <= kExampleLimit) {
      seq = cdd(l);
    }
    rows.push_back(row("CDD_" + std::to_string(l), cdd_class(l), pattern, seq));
  }
  for (int l = 1; l <= max_ga8_level; ++l) {
    std::string pattern = l == 1 ? "GA8_a" : "GA8_a[GA8_" + std::to_string(l - 1) + "]";
    std::optional<PulseSequence> seq;
    if (ga8_class(l).pulse_count() <= kExampleLimit) {
      seq = ga8(l);
    }
    rows.push_back(row("GA8_" + std::to_string(l), ga8_class(l), pattern, seq));
  }
  return rows;
}

}  // namespace cpdd
