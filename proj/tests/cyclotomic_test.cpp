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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ppforge/cyclotomic.hpp"
#include "ppforge/error.hpp"
#include "ppforge/oracle.hpp"
#include "ppforge/poly_text.hpp"

namespace ppforge {
namespace {

FqPoly P(const Field& f, const char* text) { return parse_poly(f, text); }

Theorem1Params t1(std::uint64_t d, std::uint64_t u, std::uint64_t k, std::uint64_t b, FqPoly g0 = FqPoly::constant(Fq{1})) {
  return {d, u, k, Fq{b}, std::move(g0)};
}

// --- lemma -----------------------------------------------------------------

TEST(Lemma, Identity) {
  const Field f = Field::make(7, 1);
  for (auto d : divisors(6)) EXPECT_TRUE(lemma_check(f, {1, d, FqPoly::constant(Fq{1})}).verdict());
}

TEST(Lemma, QuadraticExample) {
  const Field f = Field::make(7, 1);
  const CyclotomicForm cf{1, 2, P(f, "x+3")};
  EXPECT_EQ(expand_cyclotomic(f, cf), P(f, "x^4+3*x"));
  EXPECT_TRUE(lemma_check(f, cf).verdict());
  EXPECT_TRUE(is_permutation(f, expand_cyclotomic(f, cf)));
}

TEST(Lemma, GcdConditionFails) {
  const Field f = Field::make(7, 1);
  const auto report = lemma_check(f, {2, 3, P(f, "x+1")});
  ASSERT_EQ(report.size(), 2u);
  EXPECT_FALSE(report[0].holds);
  EXPECT_FALSE(report.verdict());
}

TEST(Lemma, WitnessOnCollision) {
  const Field f = Field::make(7, 1);
  const auto report = lemma_check(f, {1, 3, FqPoly::constant(Fq{0})});
  EXPECT_FALSE(report[1].holds);
  EXPECT_TRUE(report[1].witness.has_value());
}

TEST(Lemma, ConstantHReducesToMonomialCriterion) {
  for (const char* name : {"13", "2^4", "3^3"}) {
    const Field f = Field::parse(name);
    for (auto d : divisors(f.q() - 1)) {
      for (std::uint64_t u = 1; u < f.q(); ++u) {
        EXPECT_EQ(lemma_check(f, {u, d, FqPoly::constant(Fq{1})}).verdict(), std::gcd(u, f.q() - 1) == 1)
            << name << " d=" << d << " u=" << u;
      }
    }
  }
}

TEST(Lemma, AgreesWithOracleOnRandomForms) {
  std::mt19937_64 rng(11);
  for (const char* name : {"11", "2^3", "3^2", "17"}) {
    const Field f = Field::parse(name);
    for (auto d : divisors(f.q() - 1)) {
      for (int r = 0; r < 60; ++r) {
        std::vector<Fq> c(1 + rng() % (d + 2));
        for (auto& x : c) x = Fq{rng() % f.q()};
        const CyclotomicForm cf{1 + rng() % (f.q() - 1), d, FqPoly(std::move(c))};
        ASSERT_EQ(lemma_check(f, cf).verdict(), is_permutation(f, expand_cyclotomic(f, cf)))
            << name << " d=" << d << " u=" << cf.u << " h=" << format_poly(cf.h);
      }
    }
  }
}

TEST(Lemma, Errors) {
  const Field f = Field::make(7, 1);
  EXPECT_THROW(lemma_check(f, {1, 4, FqPoly::x()}), DomainError);
  EXPECT_THROW(lemma_check(f, {0, 3, FqPoly::x()}), DomainError);
}

// --- four-condition criterion ------------------------------------------------

TEST(FourCondition, WorkedExample) {
  const Field f = Field::make(7, 1);
  const auto params = t1(3, 1, 0, 2);
  EXPECT_EQ(theorem1_g(f, params), P(f, "x^2+x+1"));
  const auto report = theorem1_check(f, params);
  ASSERT_EQ(report.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(report[i].holds) << report[i].label;
  EXPECT_EQ(report[0].label, "gcd(u, (q-1)/d) = 1");
  EXPECT_EQ(report[1].label, "gcd(d, u + k(q-1)/d) = 1");
  EXPECT_EQ(report[2].label, "b != 0");
  EXPECT_EQ(report[3].label, "1 + g(1)/b is a d-th power in F_q^*");
  const FqPoly poly = theorem1_polynomial(f, params);
  EXPECT_EQ(poly, P(f, "x^5+x^3+3*x"));
  EXPECT_TRUE(is_permutation(f, poly));
}

TEST(FourCondition, ZeroB) {
  const Field f = Field::make(7, 1);
  const auto report = theorem1_check(f, t1(3, 1, 0, 0));
  EXPECT_FALSE(report[2].holds);
  EXPECT_FALSE(report[3].holds);
  EXPECT_TRUE(report[3].witness.has_value());
  EXPECT_FALSE(report.verdict());
}

TEST(FourCondition, ConditionFourFails) {
  const Field f = Field::make(7, 1);
  const auto params = t1(3, 1, 0, 1);
  const auto report = theorem1_check(f, params);
  EXPECT_TRUE(report[0].holds && report[1].holds && report[2].holds);
  EXPECT_FALSE(report[3].holds);
  EXPECT_FALSE(is_permutation(f, theorem1_polynomial(f, params)));
}

// Brute force over every b in F_7 (tests/oracles/derive_expected.py): only
// b = 2 gives a permutation.
TEST(FourCondition, GenerateSevenDefaults) {
  const Field f = Field::make(7, 1);
  const auto out = theorem1_generate(f, 3, Theorem1Bounds{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].first.b, Fq{2});
  for (std::uint64_t b = 0; b < 7; ++b) {
    EXPECT_EQ(is_permutation(f, theorem1_polynomial(f, t1(3, 1, 0, b))), b == 2) << b;
  }
}

TEST(FourCondition, GenerateIsOrderedAndOracleConfirmed) {
  const Field f = Field::parse("13");
  Theorem1Bounds bounds{{5, 1, 3}, {2, 0, 1, 0}, {FqPoly::constant(Fq{1}), P(f, "x+2"), FqPoly::constant(Fq{4})}};
  const auto out = theorem1_generate(f, 4, bounds);
  ASSERT_FALSE(out.empty());
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_TRUE(is_permutation(f, out[i].second));
    if (i == 0) continue;
    const auto& a = out[i - 1].first;
    const auto& b = out[i].first;
    EXPECT_LE(std::tie(a.u, a.k, a.b), std::tie(b.u, b.k, b.b));
  }
}

TEST(FourCondition, GenerateStopsWhenSinkDeclines) {
  const Field f = Field::parse("13");
  int seen = 0;
  theorem1_generate(f, 3, Theorem1Bounds{{1, 5, 7}, {0, 1, 2}, {FqPoly::constant(Fq{1})}},
                    [&](const Theorem1Params&, const FqPoly&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2);
}

TEST(FourCondition, BoundsWithoutValidUGiveEmptyStream) {
  const Field f = Field::parse("13");  // (q-1)/d = 4 for d = 3
  EXPECT_TRUE(theorem1_generate(f, 3, Theorem1Bounds{{2, 4, 6}, {0, 1, 2}, {FqPoly::constant(Fq{1})}}).empty());
}

TEST(FourCondition, ExplicitG) {
  const Field f = Field::parse("11");
  const FqPoly g = mul(f, h_d_poly(5), P(f, "x+3"));
  const auto params = Theorem1Params::from_g(f, 5, 1, 0, Fq{1}, g);
  EXPECT_EQ(params.g0, P(f, "x+3"));
  EXPECT_EQ(theorem1_g(f, params), g);
}

// g = h_5 - x^3 - x^4 = x^2 + x + 1 is not a multiple of h_5; brute force
// over all b finds no permutation either, so nothing is lost by refusing it.
TEST(FourCondition, NonDivisibleGIsRejected) {
  const Field f = Field::parse("11");
  const FqPoly g = P(f, "x^2+x+1");
  EXPECT_THROW(Theorem1Params::from_g(f, 5, 5, 7, Fq{1}, g), ScopeError);
  for (std::uint64_t b = 0; b < 11; ++b) {
    const FqPoly h = add(f, FqPoly::monomial(Fq{b}, 7), g);
    EXPECT_FALSE(is_permutation(f, expand_cyclotomic(f, {5, 5, h}))) << b;
  }
}

TEST(FourCondition, ScopeErrors) {
  const Field f = Field::make(7, 1);
  EXPECT_THROW(theorem1_check(f, t1(2, 1, 0, 2)), ScopeError);
  EXPECT_THROW(theorem1_check(f, t1(4, 1, 0, 2)), ScopeError);
  EXPECT_THROW(theorem1_check(f, t1(3, 0, 0, 2)), ScopeError);
}

TEST(FourCondition, KIsReducedModuloD) {
  const Field f = Field::parse("13");
  for (std::uint64_t b = 1; b < 13; ++b) {
    EXPECT_EQ(theorem1_polynomial(f, t1(3, 1, 4, b)), theorem1_polynomial(f, t1(3, 1, 1, b)));
    EXPECT_EQ(theorem1_check(f, t1(3, 1, 4, b)).verdict(), theorem1_check(f, t1(3, 1, 1, b)).verdict());
  }
}

TEST(FourCondition, FhatOnRootsOfUnity) {
  const Field f = Field::make(7, 1);
  const auto params = t1(3, 1, 0, 2);
  const auto table = fhat_on_mu_d(f, params);
  ASSERT_EQ(table.size(), 3u);
  const Fq g1 = eval(f, theorem1_g(f, params), f.one());
  for (const auto& [z, v] : table) {
    if (z == f.one()) {
      EXPECT_EQ(v, f.pow(f.add(params.b, g1), 2));
    } else {
      EXPECT_EQ(v, f.mul(f.pow(params.b, 2), z));
    }
    if (z == Fq{2}) {
      EXPECT_EQ(v, Fq{1});
    }
  }
}

TEST(FourCondition, AgreesWithOracleOnSmallGrid) {
  const Field f = Field::parse("13");
  for (auto d : {3u, 4u, 6u, 12u}) {
    for (std::uint64_t u = 1; u < 13; ++u) {
      for (std::uint64_t k = 0; k < d; ++k) {
        for (std::uint64_t b = 0; b < 13; ++b) {
          const auto params = t1(d, u, k, b, FqPoly({Fq{b % 3}, Fq{1}}));
          ASSERT_EQ(theorem1_check(f, params).verdict(), is_permutation(f, theorem1_polynomial(f, params)))
              << "d=" << d << " u=" << u << " k=" << k << " b=" << b;
        }
      }
    }
  }
}

// --- hermite ----------------------------------------------------------------

TEST(Hermite, WorkedExample) {
  const Field f = Field::make(7, 1);
  const HermiteParams hp{Fq{2}, Fq{1}, 1, 5};
  const auto family = hermite_family(f, hp);
  EXPECT_TRUE(family.sufficient.verdict());
  EXPECT_TRUE(is_permutation(f, family.polynomial));
}

TEST(Hermite, EqualBranches) {
  const Field f = Field::parse("11");
  for (std::uint64_t a = 1; a < 11; ++a) {
    const auto family = hermite_family(f, {Fq{a}, Fq{a}, 3, 3});
    EXPECT_EQ(family.polynomial, FqPoly::monomial(f.mul(f.embed(2), Fq{a}), 3));
  }
}

TEST(Hermite, PiecewiseIdentity) {
  for (const char* name : {"7", "3^2", "5^2"}) {
    const Field f = Field::parse(name);
    std::mt19937_64 rng(12);
    for (int r = 0; r < 40; ++r) {
      const HermiteParams hp{Fq{1 + rng() % (f.q() - 1)}, Fq{1 + rng() % (f.q() - 1)}, 1 + rng() % (f.q() - 1),
                             1 + rng() % (f.q() - 1)};
      const auto family = hermite_family(f, hp);
      EXPECT_EQ(eval(f, family.polynomial, f.zero()), f.zero());
      for (std::uint64_t x = 0; x < f.q(); ++x) {
        const Fq coeff = f.mul(f.embed(2), f.is_square(Fq{x}) ? hp.a : hp.b);
        const Fq want = x == 0 ? f.zero() : f.mul(coeff, f.pow(Fq{x}, f.is_square(Fq{x}) ? hp.i : hp.j));
        EXPECT_EQ(hermite_piecewise(f, hp, Fq{x}), want);
        EXPECT_EQ(eval(f, family.polynomial, Fq{x}), want);
      }
    }
  }
}

TEST(Hermite, Errors) {
  EXPECT_THROW(hermite_family(Field::parse("2^3"), {Fq{1}, Fq{1}, 1, 1}), ScopeError);
  EXPECT_THROW(hermite_family(Field::parse("7"), {Fq{0}, Fq{1}, 1, 1}), DomainError);
}

}  // namespace
}  // namespace ppforge
