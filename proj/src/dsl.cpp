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

#include "cpdd/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cpdd::dsl {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_literal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
  });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SeqExpr parse_all() {
    skip_space();
    if (at_end()) {
      fail("empty expression");
    }
    SeqExpr e = parse_expr();
    skip_space();
    if (!at_end()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  SeqExpr parse_expr() {
    SeqExpr e = parse_primary();
    skip_space();
    while (peek() == '[') {
      const std::size_t open = pos_;
      ++pos_;
      skip_space();
      SeqExpr inner = parse_expr();
      skip_space();
      expect(']', open);
      SeqExpr combined;
      combined.offset = e.offset;
      combined.node = Concat{std::make_unique<SeqExpr>(std::move(e)),
                             std::make_unique<SeqExpr>(std::move(inner))};
      e = std::move(combined);
      skip_space();
    }
    return e;
  }

  SeqExpr parse_primary() {
    skip_space();
    const std::size_t start = pos_;
    if (at_end()) {
      fail("expected a sequence expression");
    }
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    const std::string key = lower(word);

    SeqExpr e;
    e.offset = start;
    if (key == "px" || key == "py" || key == "pz") {
      e.node = Projection{*axis_from_char(static_cast<char>(std::toupper(key[1])))};
    } else if (key == "cdd" || key == "ga8" || key == "oudd") {
      skip_space();
      expect('(', start);
      skip_space();
      const std::size_t arg_at = pos_;
      const int value = parse_int();
      skip_space();
      expect(')', start);
      check_range(key, value, arg_at);
      e.node = Named{key, value};
    } else if (key == "pdd" || key == "ga8a" || key == "ga8b") {
      skip_space();
      if (peek() == '(') {
        fail(key + " takes no parameter");
      }
      e.node = Named{key, std::nullopt};
    } else if (key == "cpdd") {
      skip_space();
      expect('{', start);
      ClassSpec spec;
      skip_space();
      spec.n_x = parse_int();
      skip_space();
      expect(',', start);
      skip_space();
      spec.n_y = parse_int();
      skip_space();
      expect(',', start);
      skip_space();
      spec.n_z = parse_int();
      skip_space();
      expect('}', start);
      const int total = spec.n_x + spec.n_y + spec.n_z;
      if (total < 1 || total > kMaxClassProjections) {
        throw ParseError(start, "cpdd{} needs between 1 and " +
                                    std::to_string(kMaxClassProjections) + " projections");
      }
      e.node = spec;
    } else if (is_literal(word)) {
      e.node = Literal{std::string(word)};
    } else {
      throw ParseError(start, "unknown name '" + std::string(word) + "'");
    }
    return e;
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a non-negative integer");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      throw ParseError(start, "integer out of range");
    }
    return value;
  }

  void check_range(const std::string& name, int value, std::size_t at) const {
    const int hi = name == "cdd" ? kMaxCddLevel : name == "ga8" ? kMaxGa8Level : kMaxOuddOrder;
    if (value < 1 || value > hi) {
      throw ParseError(at, name + " parameter must be in [1, " + std::to_string(hi) + "], got " +
                               std::to_string(value));
    }
  }

  void expect(char c, std::size_t context) {
    if (peek() != c) {
      const std::string found =
          at_end() ? std::string("end of input") : std::string("'") + text_[pos_] + "'";
      throw ParseError(pos_, std::string("expected '") + c + "' (opened at offset " +
                                 std::to_string(context) + "), found " + found);
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

PulseSequence elaborate_named(const Named& n) {
  if (n.name == "pdd") {
    return pdd();
  }
  if (n.name == "ga8a") {
    return ga8a();
  }
  if (n.name == "ga8b") {
    return ga8b();
  }
  const int p = n.parameter.value_or(1);
  if (n.name == "cdd") {
    return cdd(p);
  }
  if (n.name == "ga8") {
    return ga8(p);
  }
  if (n.name == "oudd") {
    return cpdd_from_class(oudd(p));
  }
  throw SequenceError("unknown scheme '" + n.name + "'");
}

}  // namespace

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

SeqExpr parse(std::string_view text) { return Parser(text).parse_all(); }

PulseSequence elaborate(const SeqExpr& expr) {
  return std::visit(
      [](const auto& node) -> PulseSequence {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return PulseSequence::from_written_order(node.written_order);
        } else if constexpr (std::is_same_v<T, Projection>) {
          return projection(node.axis);
        } else if constexpr (std::is_same_v<T, Concat>) {
          return concat(elaborate(*node.outer), elaborate(*node.inner));
        } else if constexpr (std::is_same_v<T, Named>) {
          return elaborate_named(node);
        } else {
          return cpdd_from_class(class_of(node.n_x, node.n_y, node.n_z));
        }
      },
      expr.node);
}

PulseSequence elaborate(std::string_view text) { return elaborate(parse(text)); }

std::string print(const PulseSequence& seq) { return seq.written_order(); }

std::string describe(const SeqExpr& expr) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return "Literal(" + node.written_order + ")";
        } else if constexpr (std::is_same_v<T, Projection>) {
          return std::string("p") + axis_label(node.axis);
        } else if constexpr (std::is_same_v<T, Concat>) {
          return "Concat(" + describe(*node.outer) + ", " + describe(*node.inner) + ")";
        } else if constexpr (std::is_same_v<T, Named>) {
          return node.parameter ? node.name + "(" + std::to_string(*node.parameter) + ")"
                                : node.name;
        } else {
          return "cpdd{" + std::to_string(node.n_x) + "," + std::to_string(node.n_y) + "," +
                 std::to_string(node.n_z) + "}";
        }
      },
      expr.node);
}

}  // namespace cpdd::dsl
