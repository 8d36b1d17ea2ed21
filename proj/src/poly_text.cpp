// Copyright 2026 The ppforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppforge/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "ppforge/error.hpp"

namespace ppforge {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  // (exponent, coefficient index) pairs in input order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms() {
    if (text_.empty()) fail("empty polynomial");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    while (true) {
      const auto [coeff, exponent] = term();
      out.emplace_back(exponent, coeff);
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<std::uint64_t, std::uint64_t> term() {
    if (peek() == 'x') return {1, power()};
    const std::uint64_t coeff = number();
    if (peek() != '*') return {coeff, 0};
    ++pos_;
    if (peek() != 'x') fail("expected 'x' after '*'");
    return {coeff, power()};
  }

  // Consumes 'x' ('^' exp)?.
  std::uint64_t power() {
    ++pos_;
    if (peek() != '^') return 1;
    ++pos_;
    const std::uint64_t e = number();
    if (e > kMaxParsedExponent) fail("exponent " + std::to_string(e) + " exceeds the parser limit");
    return e;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) fail("integer overflow");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + what + " in '" + text_ + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

FqPoly parse_poly(const Field& field, std::string_view text) {
  const auto terms = Parser(text).terms();
  std::uint64_t top = 0;
  for (const auto& term : terms) top = std::max(top, term.first);
  std::vector<Fq> coeffs(top + 1);
  for (const auto& [exponent, coeff] : terms) {
    if (coeff >= field.q()) {
      throw ParseError("coefficient " + std::to_string(coeff) + " is not an element index of F_" +
                       std::to_string(field.q()));
    }
    coeffs[exponent] = field.add(coeffs[exponent], Fq{coeff});
  }
  return FqPoly(std::move(coeffs));
}

AdditivePoly parse_additive(const Field& field, std::string_view text) {
  AdditivePoly out;
  if (!to_additive(field, parse_poly(field, text), out)) {
    throw ParseError("'" + std::string(text) + "' is not additive: every exponent must be a power of " +
                     std::to_string(field.p()));
  }
  return out;
}

std::string format_poly(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coefficients();
  for (std::size_t e = c.size(); e-- > 0;) {
    if (c[e].index == 0) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += std::to_string(c[e].index);
      continue;
    }
    if (c[e].index != 1) out += std::to_string(c[e].index) + "*";
    out += 'x';
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format_additive(const Field& field, const AdditivePoly& A) {
  if (A.is_zero()) return "0";
  std::string out;
  const auto c = A.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].index == 0) continue;
    if (!out.empty()) out += '+';
    if (c[i].index != 1) out += std::to_string(c[i].index) + "*";
    out += 'x';
    std::uint64_t e = 1;
    for (std::size_t k = 0; k < i; ++k) e *= field.p();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace ppforge
