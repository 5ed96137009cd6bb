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

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cpdd/pauli.hpp"
#include "cpdd/sequence.hpp"

// Pulse-sequence expressions.
//
//   expr     := primary ( "[" expr "]" )*
//   primary  := literal | proj | name | name "(" int ")" | "cpdd{" int "," int "," int "}"
//   literal  := [IXYZ]+            (written order: last pulse first)
//   proj     := px | py | pz
//   name     := cdd(l) | ga8(l) | oudd(k) | pdd | ga8a | ga8b
//
// Keywords are case-insensitive. "a[b]" concatenates b inside a, so
// px[py[pz]] nests to the right.
namespace cpdd::dsl {

struct SeqExpr;
using ExprPtr = std::unique_ptr<SeqExpr>;

struct Literal {
  std::string written_order;
};

struct Projection {
  PauliAxis axis = PauliAxis::Z;
};

struct Concat {
  ExprPtr outer;
  ExprPtr inner;
};

struct Named {
  std::string name;  // lower case
  std::optional<int> parameter;
};

struct ClassSpec {
  int n_x = 0;
  int n_y = 0;
  int n_z = 0;
};

struct SeqExpr {
  std::variant<Literal, Projection, Concat, Named, ClassSpec> node;
  std::size_t offset = 0;  // byte offset of the expression in the source text
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parameter ranges for named schemes; they keep sequences below 2^16 pulses.
inline constexpr int kMaxCddLevel = 8;
inline constexpr int kMaxGa8Level = 5;
inline constexpr int kMaxOuddOrder = 10;
inline constexpr int kMaxClassProjections = 16;

SeqExpr parse(std::string_view text);

PulseSequence elaborate(const SeqExpr& expr);
PulseSequence elaborate(std::string_view text);

/// Written-order axis string; elaborate(parse(print(s))) has the axes of s.
std::string print(const PulseSequence& seq);

/// Debug form of the tree, e.g. "Concat(px, Concat(py, pz))".
std::string describe(const SeqExpr& expr);

}  // namespace cpdd::dsl
