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
#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpdd/pauli.hpp"
#include "cpdd/sequence.hpp"

namespace cpdd::symbolic {

/// Abstract bath operators. B0 is the pure-bath Hamiltonian; Bx, By, Bz couple
/// to sigma_x, sigma_y, sigma_z. No relations among them are assumed.
enum class BathSymbol : std::uint8_t { B0 = 0, Bx = 1, By = 2, Bz = 3 };

inline constexpr std::array<BathSymbol, 4> kAllSymbols = {BathSymbol::B0, BathSymbol::Bx,
                                                          BathSymbol::By, BathSymbol::Bz};

std::string symbol_name(BathSymbol s);
/// The symbol coupled to `axis` in the generic Hamiltonian (I -> B0).
BathSymbol coupled_symbol(PauliAxis axis);

/// Free (noncommutative) product of bath symbols, leftmost factor first.
using BathWord = std::vector<BathSymbol>;

using Rational = boost::rational<std::int64_t>;

/// Exact complex rational re + i*im.
struct Coefficient {
  Rational re{0};
  Rational im{0};

  Coefficient() = default;
  Coefficient(Rational r, Rational i = Rational(0)) : re(r), im(i) {}  // NOLINT
  Coefficient(std::int64_t r) : re(r) {}                               // NOLINT

  bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
  Coefficient operator-() const { return {-re, -im}; }
  Coefficient& operator+=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a += -b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  Coefficient times(Phase p) const;
  std::string str() const;
};

/// One term's key: tau_d^grade times a bath word.
struct Monomial {
  int grade = 0;
  BathWord word;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Polynomial in bath words with exact coefficients and tau_d grades. Zero
/// coefficients are never stored, so equality is map equality.
class BathPoly {
 public:
  BathPoly() = default;
  static BathPoly symbol(BathSymbol s, Coefficient c = Coefficient(1));

  void add(const Monomial& m, const Coefficient& c);

  bool empty() const { return terms_.empty(); }
  const std::map<Monomial, Coefficient>& terms() const { return terms_; }
  /// Coefficient of a grade-0 word; zero when absent.
  Coefficient coefficient(const BathWord& word, int grade = 0) const;
  int max_grade() const;

  BathPoly& operator+=(const BathPoly& o);
  BathPoly& operator-=(const BathPoly& o);
  BathPoly operator-() const;
  friend BathPoly operator+(BathPoly a, const BathPoly& b) { return a += b; }
  friend BathPoly operator-(BathPoly a, const BathPoly& b) { return a -= b; }
  friend BathPoly operator*(const BathPoly& a, const BathPoly& b);
  friend BathPoly operator*(const Coefficient& c, const BathPoly& p);
  friend bool operator==(const BathPoly&, const BathPoly&) = default;

  /// Multiplies every term by tau_d^power.
  BathPoly times_tau(int power) const;

  std::string str() const;

 private:
  std::map<Monomial, Coefficient> terms_;
};

BathPoly commutator(const BathPoly& a, const BathPoly& b);
BathPoly anticommutator(const BathPoly& a, const BathPoly& b);

/// sum_mu sigma_mu (x) poly_mu over mu in {1, x, y, z}.
class SBOperator {
 public:
  SBOperator() = default;

  BathPoly& operator[](PauliAxis mu) { return parts_[index_of(mu)]; }
  const BathPoly& operator[](PauliAxis mu) const { return parts_[index_of(mu)]; }

  bool is_zero() const;

  SBOperator& operator+=(const SBOperator& o);
  SBOperator& operator-=(const SBOperator& o);
  friend SBOperator operator+(SBOperator a, const SBOperator& b) { return a += b; }
  friend SBOperator operator-(SBOperator a, const SBOperator& b) { return a -= b; }
  /// Operator product; the Pauli factors multiply exactly with phases.
  friend SBOperator operator*(const SBOperator& a, const SBOperator& b);
  friend SBOperator operator*(const Coefficient& c, const SBOperator& op);
  friend bool operator==(const SBOperator&, const SBOperator&) = default;

  /// P^dagger (this) P for a Pauli pulse frame P.
  SBOperator conjugated_by(PauliAxis p) const;
  SBOperator times_tau(int power) const;

  /// e.g. "1⊗[B_0] + σ_z⊗[B_z]"; "0" for the zero operator.
  std::string str() const;

 private:
  std::array<BathPoly, 4> parts_;
};

SBOperator commutator(const SBOperator& a, const SBOperator& b);

/// 1⊗B0 + σx⊗Bx + σy⊗By + σz⊗Bz.
SBOperator h0_generic();

/// Frame j (j = 1..K) is U_j^dagger H U_j with U_j the product of the first j
/// pulses.
std::vector<SBOperator> toggling_frames(const PulseSequence& seq, const SBOperator& h);

/// The Hamiltonian in force during each free interval, in time order:
/// interval j (j = 1..K) sees U_{j-1}^dagger H U_{j-1}, U_0 = 1. For a cyclic
/// sequence this is toggling_frames rotated by one place.
std::vector<SBOperator> interval_frames(const PulseSequence& seq, const SBOperator& h);

/// (1/K) sum_j frames[j]. Throws std::invalid_argument for an empty list.
SBOperator avg_h0(std::span<const SBOperator> frames);

/// First Magnus term for K equal intervals, frames in time order:
/// (-i tau_d / 2K) sum_{j>k} [H_j, H_k], carried at grade tau_d^1.
SBOperator avg_h1(std::span<const SBOperator> frames);

/// Zeroth-order map of the projection p_axis: keeps the identity and `axis`
/// components and drops the other two.
SBOperator project0(PauliAxis axis, const SBOperator& h);

/// Applies project0 for each axis of `order`, innermost first.
SBOperator project_chain(std::span<const PauliAxis> order, const SBOperator& h);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks that the zeroth-order map of A[B] equals pi_B(pi_A(H)) exactly.
/// A must be a projection primitive and B must be cyclic.
bool verify_concatenation_lemma(const PulseSequence& projection_seq, const PulseSequence& inner,
                                const SBOperator& h = h0_generic());

}  // namespace cpdd::symbolic
