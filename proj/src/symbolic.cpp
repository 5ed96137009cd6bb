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

#include "cpdd/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace cpdd::symbolic {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) {
    out << '/' << r.denominator();
  }
  return out.str();
}

}  // namespace

std::string symbol_name(BathSymbol s) {
  switch (s) {
    case BathSymbol::B0:
      return "B_0";
    case BathSymbol::Bx:
      return "B_x";
    case BathSymbol::By:
      return "B_y";
    case BathSymbol::Bz:
      return "B_z";
  }
  return "?";
}

BathSymbol coupled_symbol(PauliAxis axis) {
  return static_cast<BathSymbol>(static_cast<std::uint8_t>(axis));
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Coefficient Coefficient::times(Phase p) const {
  switch (p.power()) {
    case 1:
      return {-im, re};
    case 2:
      return {-re, -im};
    case 3:
      return {im, -re};
    default:
      return *this;
  }
}

std::string Coefficient::str() const {
  if (im.numerator() == 0) {
    return rational_str(re);
  }
  auto imag = [](const Rational& r) {
    if (r == Rational(1)) {
      return std::string("i");
    }
    if (r == Rational(-1)) {
      return std::string("-i");
    }
    std::string num = std::to_string(r.numerator());
    if (num == "1") {
      num.clear();
    } else if (num == "-1") {
      num = "-";
    }
    std::string s = num + "i";
    if (r.denominator() != 1) {
      s += "/" + std::to_string(r.denominator());
    }
    return s;
  };
  if (re.numerator() == 0) {
    return imag(im);
  }
  std::string i_part = imag(im);
  if (i_part.front() != '-') {
    i_part = "+" + i_part;
  }
  return "(" + rational_str(re) + i_part + ")";
}

BathPoly BathPoly::symbol(BathSymbol s, Coefficient c) {
  BathPoly p;
  p.add(Monomial{0, {s}}, c);
  return p;
}

void BathPoly::add(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Coefficient BathPoly::coefficient(const BathWord& word, int grade) const {
  auto it = terms_.find(Monomial{grade, word});
  return it == terms_.end() ? Coefficient() : it->second;
}

int BathPoly::max_grade() const {
  int g = 0;
  for (const auto& [m, c] : terms_) {
    g = std::max(g, m.grade);
  }
  return g;
}

BathPoly& BathPoly::operator+=(const BathPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    add(m, c);
  }
  return *this;
}

BathPoly& BathPoly::operator-=(const BathPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    add(m, -c);
  }
  return *this;
}

BathPoly BathPoly::operator-() const {
  BathPoly out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(m, -c);
  }
  return out;
}

BathPoly operator*(const BathPoly& a, const BathPoly& b) {
  BathPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{ma.grade + mb.grade, ma.word};
      m.word.insert(m.word.end(), mb.word.begin(), mb.word.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

BathPoly operator*(const Coefficient& c, const BathPoly& p) {
  BathPoly out;
  for (const auto& [m, pc] : p.terms_) {
    out.add(m, c * pc);
  }
  return out;
}

BathPoly BathPoly::times_tau(int power) const {
  BathPoly out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(Monomial{m.grade + power, m.word}, c);
  }
  return out;
}

std::string BathPoly::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.str();
    bool negative = coeff.front() == '-';
    if (negative) {
      coeff.erase(0, 1);
    }
    if (!first) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    first = false;
    std::string factor;
    if (coeff != "1" || m.word.empty()) {
      factor = coeff;
    }
    if (m.grade == 1) {
      factor += "τ_d";
    } else if (m.grade > 1) {
      factor += "τ_d^" + std::to_string(m.grade);
    }
    std::string word;
    for (BathSymbol s : m.word) {
      word += symbol_name(s);
    }
    out += factor;
    if (!factor.empty() && !word.empty()) {
      out += " ";
    }
    out += word;
  }
  return out;
}

BathPoly commutator(const BathPoly& a, const BathPoly& b) { return a * b - b * a; }

BathPoly anticommutator(const BathPoly& a, const BathPoly& b) { return a * b + b * a; }

bool SBOperator::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const BathPoly& p) { return p.empty(); });
}

SBOperator& SBOperator::operator+=(const SBOperator& o) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    parts_[i] += o.parts_[i];
  }
  return *this;
}

SBOperator& SBOperator::operator-=(const SBOperator& o) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    parts_[i] -= o.parts_[i];
  }
  return *this;
}

SBOperator operator*(const SBOperator& a, const SBOperator& b) {
  SBOperator out;
  for (PauliAxis pa : kAllAxes) {
    if (a[pa].empty()) {
      continue;
    }
    for (PauliAxis pb : kAllAxes) {
      if (b[pb].empty()) {
        continue;
      }
      const PhasedPauli prod = mul(pa, pb);
      out[prod.axis] += Coefficient(1).times(prod.phase) * (a[pa] * b[pb]);
    }
  }
  return out;
}

SBOperator operator*(const Coefficient& c, const SBOperator& op) {
  SBOperator out;
  for (PauliAxis mu : kAllAxes) {
    out[mu] = c * op[mu];
  }
  return out;
}

SBOperator SBOperator::conjugated_by(PauliAxis p) const {
  SBOperator out = *this;
  for (PauliAxis mu : kAllAxes) {
    if (conj_sign(p, mu) < 0) {
      out[mu] = -out[mu];
    }
  }
  return out;
}

SBOperator SBOperator::times_tau(int power) const {
  SBOperator out;
  for (PauliAxis mu : kAllAxes) {
    out[mu] = (*this)[mu].times_tau(power);
  }
  return out;
}

std::string SBOperator::str() const {
  std::string out;
  for (PauliAxis mu : kAllAxes) {
    const BathPoly& p = (*this)[mu];
    if (p.empty()) {
      continue;
    }
    if (!out.empty()) {
      out += " + ";
    }
    out += mu == PauliAxis::I ? std::string("1") : std::string("σ_") + axis_label(mu);
    out += "⊗[" + p.str() + "]";
  }
  return out.empty() ? "0" : out;
}

SBOperator commutator(const SBOperator& a, const SBOperator& b) { return a * b - b * a; }

SBOperator h0_generic() {
  SBOperator h;
  for (PauliAxis mu : kAllAxes) {
    h[mu] = BathPoly::symbol(coupled_symbol(mu));
  }
  return h;
}

std::vector<SBOperator> toggling_frames(const PulseSequence& seq, const SBOperator& h) {
  std::vector<SBOperator> frames;
  frames.reserve(seq.size());
  PhasedPauli u;
  for (const auto& pulse : seq.pulses()) {
    u = mul(pulse, u);
    frames.push_back(h.conjugated_by(u.axis));
  }
  return frames;
}

std::vector<SBOperator> interval_frames(const PulseSequence& seq, const SBOperator& h) {
  std::vector<SBOperator> frames;
  frames.reserve(seq.size());
  PhasedPauli u;
  for (const auto& pulse : seq.pulses()) {
    frames.push_back(h.conjugated_by(u.axis));
    u = mul(pulse, u);
  }
  return frames;
}

SBOperator avg_h0(std::span<const SBOperator> frames) {
  if (frames.empty()) {
    throw std::invalid_argument("avg_h0 needs at least one frame");
  }
  SBOperator sum;
  for (const auto& f : frames) {
    sum += f;
  }
  return Coefficient(Rational(1, static_cast<std::int64_t>(frames.size()))) * sum;
}

SBOperator avg_h1(std::span<const SBOperator> frames) {
  if (frames.empty()) {
    throw std::invalid_argument("avg_h1 needs at least one frame");
  }
  // sum_{j>k} [H_j, H_k] = sum_j [H_j, H_1 + ... + H_{j-1}]
  SBOperator prefix = frames.front();
  SBOperator total;
  for (std::size_t j = 1; j < frames.size(); ++j) {
    total += commutator(frames[j], prefix);
    prefix += frames[j];
  }
  const auto k = static_cast<std::int64_t>(frames.size());
  const Coefficient scale(Rational(0), Rational(-1, 2 * k));
  return (scale * total).times_tau(1);
}

SBOperator project0(PauliAxis axis, const SBOperator& h) {
  if (axis == PauliAxis::I) {
    throw std::invalid_argument("project0 needs a non-identity axis");
  }
  SBOperator out;
  out[PauliAxis::I] = h[PauliAxis::I];
  out[axis] = h[axis];
  return out;
}

SBOperator project_chain(std::span<const PauliAxis> order, const SBOperator& h) {
  SBOperator out = h;
  for (PauliAxis axis : order) {
    out = project0(axis, out);
  }
  return out;
}

bool verify_concatenation_lemma(const PulseSequence& projection_seq, const PulseSequence& inner,
                                const SBOperator& h) {
  const auto& pulses = projection_seq.pulses();
  if (pulses.size() != 2 || pulses[0].axis != pulses[1].axis || pulses[0].axis == PauliAxis::I) {
    throw PreconditionError(
        "the concatenation check needs a projection sequence P_jP_j as the outer sequence");
  }
  if (!is_cyclic(inner)) {
    throw PreconditionError("the concatenation check needs a cyclic inner sequence, got " +
                            inner.written_order());
  }
  const PulseSequence combined = concat(projection_seq, inner);
  const SBOperator direct = avg_h0(toggling_frames(combined, h));
  const SBOperator projected = avg_h0(toggling_frames(projection_seq, h));
  const SBOperator successive = avg_h0(toggling_frames(inner, projected));
  return direct == successive;
}

}  // namespace cpdd::symbolic
