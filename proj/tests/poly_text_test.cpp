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

#include <random>

#include <gtest/gtest.h>

#include "ppforge/error.hpp"
#include "ppforge/poly_text.hpp"

namespace ppforge {
namespace {

TEST(PolyText, ParsesTerms) {
  const Field f = Field::parse("3^2");
  EXPECT_EQ(parse_poly(f, "x"), FqPoly::x());
  EXPECT_EQ(parse_poly(f, "0"), FqPoly());
  EXPECT_EQ(parse_poly(f, "7"), FqPoly::constant(Fq{7}));
  EXPECT_EQ(parse_poly(f, "3*x^3+3*x"), FqPoly({Fq{0}, Fq{3}, Fq{0}, Fq{3}}));
  EXPECT_EQ(parse_poly(f, " 3 * x ^ 3 +\t3*x "), parse_poly(f, "3*x^3+3*x"));
  EXPECT_EQ(parse_poly(f, "x^2+x^2"), FqPoly({Fq{0}, Fq{0}, Fq{2}}));
  EXPECT_EQ(parse_poly(f, "x^2+2*x^2"), FqPoly());  // 1 + 2 = 0 in characteristic 3
  EXPECT_EQ(parse_poly(f, "2*x"), FqPoly({Fq{0}, Fq{2}}));
}

TEST(PolyText, RejectsMalformedInput) {
  const Field f = Field::parse("7");
  for (const char* bad : {"", "+", "x+", "x^", "2x", "x*2", "y", "x^-1", "--x", "3*", "x^2^3", "1.5"}) {
    EXPECT_THROW(parse_poly(f, bad), ParseError) << '"' << bad << '"';
  }
  EXPECT_THROW(parse_poly(f, "7*x"), ParseError);  // coefficient out of range
  EXPECT_THROW(parse_poly(f, "x^2000000"), ParseError);
}

TEST(PolyText, Formatting) {
  const Field f = Field::parse("3^2");
  EXPECT_EQ(format_poly(FqPoly()), "0");
  EXPECT_EQ(format_poly(FqPoly::constant(Fq{1})), "1");
  EXPECT_EQ(format_poly(FqPoly::x()), "x");
  EXPECT_EQ(format_poly(parse_poly(f, "x+3*x^6+6*x^4+3*x^2")), "3*x^6+6*x^4+3*x^2+x");
  EXPECT_EQ(format_poly(parse_poly(f, "5+x")), "x+5");
}

TEST(PolyText, RoundTrip) {
  const Field f = Field::parse("5^2");
  std::mt19937_64 rng(8);
  for (int r = 0; r < 300; ++r) {
    std::vector<Fq> c(rng() % 12);
    for (auto& x : c) x = Fq{rng() % f.q()};
    const FqPoly a(std::move(c));
    EXPECT_EQ(parse_poly(f, format_poly(a)), a);
  }
}

TEST(PolyText, AdditiveForms) {
  const Field f = Field::parse("3^2");
  EXPECT_EQ(parse_additive(f, "x^3+x"), trace_poly(f));
  EXPECT_EQ(parse_additive(f, "3*x"), AdditivePoly({Fq{3}}));
  EXPECT_EQ(parse_additive(f, "0"), AdditivePoly());
  EXPECT_THROW(parse_additive(f, "x^2"), ParseError);
  EXPECT_THROW(parse_additive(f, "x+1"), ParseError);
  EXPECT_EQ(format_additive(f, AdditivePoly({Fq{0}, Fq{4}})), "4*x^3");
}

}  // namespace
}  // namespace ppforge
