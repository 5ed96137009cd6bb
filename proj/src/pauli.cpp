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

#include "cpdd/pauli.hpp"

namespace cpdd {

char axis_char(PauliAxis a) { return "IXYZ"[index_of(a)]; }

char axis_label(PauliAxis a) { return "1xyz"[index_of(a)]; }

std::optional<PauliAxis> axis_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliAxis::I;
    case 'X':
      return PauliAxis::X;
    case 'Y':
      return PauliAxis::Y;
    case 'Z':
      return PauliAxis::Z;
    default:
      return std::nullopt;
  }
}

std::string_view Phase::prefix() const {
  static constexpr std::array<std::string_view, 4> kPrefixes = {"", "i", "-", "-i"};
  return kPrefixes[power_];
}

PhasedPauli mul(PauliAxis a, PauliAxis b) {
  if (a == PauliAxis::I) {
    return PhasedPauli(b);
  }
  if (b == PauliAxis::I) {
    return PhasedPauli(a);
  }
  if (a == b) {
    return PhasedPauli::identity();
  }
  // X, Y, Z are 1, 2, 3: the cyclic successor of a gives +i, the predecessor -i.
  const int ai = static_cast<int>(a);
  const int bi = static_cast<int>(b);
  const auto c = static_cast<PauliAxis>(6 - ai - bi);
  const bool cyclic = (ai % 3) + 1 == bi;
  return {cyclic ? Phase::i() : Phase::minus_i(), c};
}

PhasedPauli mul(const PhasedPauli& p, const PhasedPauli& q) {
  PhasedPauli r = mul(p.axis, q.axis);
  r.phase = r.phase * p.phase * q.phase;
  return r;
}

std::string PhasedPauli::str() const {
  std::string out(phase.prefix());
  out.push_back(axis_char(axis));
  return out;
}

std::optional<PhasedPauli> PhasedPauli::parse(std::string_view text) {
  if (text.empty()) {
    return std::nullopt;
  }
  Phase phase = Phase::one();
  std::string_view rest = text;
  if (rest.front() == '+') {
    rest.remove_prefix(1);
  } else if (rest.front() == '-') {
    phase = Phase::minus_one();
    rest.remove_prefix(1);
  }
  if (!rest.empty() && rest.front() == 'i') {
    phase = phase * Phase::i();
    rest.remove_prefix(1);
  }
  if (rest.size() != 1) {
    return std::nullopt;
  }
  auto axis = axis_from_char(rest.front());
  if (!axis) {
    return std::nullopt;
  }
  return PhasedPauli(phase, *axis);
}

std::ostream& operator<<(std::ostream& out, PauliAxis a) { return out << axis_char(a); }

std::ostream& operator<<(std::ostream& out, const PhasedPauli& p) { return out << p.str(); }

}  // namespace cpdd
