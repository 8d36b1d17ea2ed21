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

// Text form of polynomials:
//
//   poly  := term ('+' term)*
//   term  := coeff ('*' 'x' ('^' exp)?)? | 'x' ('^' exp)?
//   coeff := unsigned integer (element index)
//
// Whitespace is ignored. Repeated exponents are summed. Over F_9,
// "3*x^3+3*x" is t*x^3 + t*x.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ppforge/field.hpp"
#include "ppforge/poly.hpp"

namespace ppforge {

/// Largest exponent accepted by parse_poly; polynomials are dense.
inline constexpr std::uint64_t kMaxParsedExponent = std::uint64_t{1} << 20;

/// Throws ParseError on malformed text, out-of-range coefficients, or
/// exponents above kMaxParsedExponent.
FqPoly parse_poly(const Field& field, std::string_view text);

/// Parses and requires every exponent to be a power of p.
AdditivePoly parse_additive(const Field& field, std::string_view text);

/// Canonical text: descending exponents, unit coefficients elided, "0" for
/// the zero polynomial.
std::string format_poly(const FqPoly& f);
std::string format_additive(const Field& field, const AdditivePoly& A);

}  // namespace ppforge
