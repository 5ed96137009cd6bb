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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cpdd {

/// Single-qubit Pauli label. The declaration order I < X < Y < Z is the
/// canonical printing order.
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<PauliAxis, 4> kAllAxes = {PauliAxis::I, PauliAxis::X, PauliAxis::Y,
                                                      PauliAxis::Z};
inline constexpr std::array<PauliAxis, 3> kTransverseAxes = {PauliAxis::X, PauliAxis::Y,
                                                             PauliAxis::Z};

constexpr std::size_t index_of(PauliAxis a) { return static_cast<std::size_t>(a); }

char axis_char(PauliAxis a);
/// Lower-case "x"/"y"/"z" ("1" for I), as used for projection labels.
char axis_label(PauliAxis a);
std::optional<PauliAxis> axis_from_char(char c);

/// A fourth root of unity i^k, stored exactly as k mod 4.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase from_power(int k) {
    return Phase(static_cast<std::uint8_t>(((k % 4) + 4) % 4));
  }
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int power() const { return power_; }
  constexpr Phase conj() const { return from_power(-power_); }

  friend constexpr Phase operator*(Phase a, Phase b) { return from_power(a.power_ + b.power_); }
  friend constexpr bool operator==(Phase, Phase) = default;

  /// "", "i", "-", "-i".
  std::string_view prefix() const;

 private:
  constexpr explicit Phase(std::uint8_t k) : power_(k) {}
  std::uint8_t power_ = 0;
};

/// Element of the 16-element single-qubit Pauli group: phase * sigma_axis.
struct PhasedPauli {
  Phase phase{};
  PauliAxis axis = PauliAxis::I;

  constexpr PhasedPauli() = default;
  constexpr PhasedPauli(PauliAxis a) : axis(a) {}  // NOLINT(google-explicit-constructor)
  constexpr PhasedPauli(Phase p, PauliAxis a) : phase(p), axis(a) {}

  static constexpr PhasedPauli identity() { return {}; }

  friend constexpr bool operator==(const PhasedPauli&, const PhasedPauli&) = default;

  /// Canonical text: phase prefix followed by one of I/X/Y/Z.
  std::string str() const;
  /// Inverse of str(); accepts an optional "", "i", "-", "-i" (or "+") prefix.
  static std::optional<PhasedPauli> parse(std::string_view text);
};

/// Product sigma_a sigma_b = phase * sigma_c of bare Pauli matrices.
PhasedPauli mul(PauliAxis a, PauliAxis b);

/// Exact group product p * q (p on the left).
PhasedPauli mul(const PhasedPauli& p, const PhasedPauli& q);

inline PhasedPauli operator*(const PhasedPauli& p, const PhasedPauli& q) { return mul(p, q); }

/// Sign s with P^dagger sigma_mu P = s * sigma_mu. Phases of P never matter.
constexpr int conj_sign(PauliAxis p, PauliAxis mu) {
  if (p == PauliAxis::I || mu == PauliAxis::I || p == mu) {
    return 1;
  }
  return -1;
}

inline bool commutes(PauliAxis a, PauliAxis b) { return conj_sign(a, b) == 1; }

std::ostream& operator<<(std::ostream& out, PauliAxis a);
std::ostream& operator<<(std::ostream& out, const PhasedPauli& p);

}  // namespace cpdd
