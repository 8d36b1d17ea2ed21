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

#include <gtest/gtest.h>

#include "ppforge/error.hpp"
#include "ppforge/oracle.hpp"
#include "ppforge/poly_text.hpp"
#include "ppforge/record.hpp"
#include "ppforge/sampling.hpp"

namespace ppforge {
namespace {

TEST(Oracle, SmallCases) {
  const Field f7 = Field::make(7, 1);
  EXPECT_TRUE(is_permutation(f7, FqPoly::x()));
  EXPECT_FALSE(is_permutation(f7, parse_poly(f7, "x^2")));
  EXPECT_TRUE(is_permutation(f7, parse_poly(f7, "x^5+x^3+3*x")));
  EXPECT_FALSE(is_permutation(f7, FqPoly()));
  EXPECT_FALSE(is_permutation(f7, FqPoly::constant(Fq{3})));
}

TEST(Oracle, MonomialsFollowTheGcdRule) {
  for (const char* name : {"2^5", "3^3", "101"}) {
    const Field f = Field::parse(name);
    for (std::uint64_t e = 1; e < f.q(); ++e) {
      ASSERT_EQ(is_permutation(f, FqPoly::monomial(Fq{1}, e)), std::gcd(e, f.q() - 1) == 1) << name << ' ' << e;
    }
  }
}

TEST(Oracle, SparseAndDensePathsAgree) {
  // x^(q-2) + c x: sparse and high degree.
  const Field f = Field::parse("2^8");
  for (std::uint64_t c = 0; c < 16; ++c) {
    const FqPoly sparse = add(f, FqPoly::monomial(Fq{1}, f.q() - 2), FqPoly::monomial(Fq{c}, 1));
    bool injective = true;
    std::vector<bool> hit(f.q(), false);
    for (std::uint64_t x = 0; x < f.q(); ++x) {
      const Fq v = f.add(f.pow(Fq{x}, f.q() - 2), f.mul(Fq{c}, Fq{x}));
      injective = injective && !hit[v.index];
      hit[v.index] = true;
    }
    EXPECT_EQ(is_permutation(f, sparse), injective) << c;
  }
}

TEST(Oracle, BoundIsEnforced) {
  const Field f = Field::parse("2^17");
  EXPECT_THROW(is_permutation(f, FqPoly::x()), OracleBoundError);
  EXPECT_TRUE(is_permutation(f, FqPoly::x(), f.q()));
  EXPECT_THROW(is_permutation(Field::parse("7"), FqPoly::x(), 5), OracleBoundError);
}

TEST(Suites, NamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_EQ(all_suites().size(), 8u);
  EXPECT_THROW(parse_suite("nope"), DomainError);
  EXPECT_EQ(default_fields(Suite::lemma).size(), 10u);
  EXPECT_EQ(default_fields(Suite::theorem1), (std::vector<std::string>{"7", "3^2", "11", "13", "5^2", "3^3"}));
}

TEST(Suites, EmptyFieldListPasses) {
  const auto report = run_equivalence_suite({Suite::theorem1, {}, kDefaultSeed, 1, kDefaultMaxQ});
  EXPECT_EQ(report.cases_run, 0u);
  EXPECT_TRUE(report.passed());
}

TEST(Suites, FieldsAboveBoundAreSkipped) {
  const auto report = run_equivalence_suite({Suite::lemma, {"7", "3^2"}, kDefaultSeed, 1, 8});
  EXPECT_EQ(report.skipped_fields, std::vector<std::string>{"3^2"});
  EXPECT_GT(report.cases_run, 0u);
  EXPECT_TRUE(report.passed());
}

class SmallSuites : public ::testing::TestWithParam<Suite> {};

TEST_P(SmallSuites, PassOnSmallFieldsAndIgnoreThreadCount) {
  const Suite s = GetParam();
  std::vector<std::string> fields{"3^2", "7"};
  if (s == Suite::proposition || s == Suite::corollary2 || s == Suite::trace_theorem) fields = {"2^3", "3^2"};
  if (s == Suite::example_family) fields = {"3^2", "5^2"};
  const auto one = run_equivalence_suite({s, fields, kDefaultSeed, 1, kDefaultMaxQ});
  const auto many = run_equivalence_suite({s, fields, kDefaultSeed, 4, kDefaultMaxQ});
  EXPECT_TRUE(one.passed()) << to_json_line(one);
  EXPECT_GT(one.cases_run, 0u);
  EXPECT_EQ(to_json_line(one), to_json_line(many));
}

INSTANTIATE_TEST_SUITE_P(All, SmallSuites, ::testing::ValuesIn(all_suites()),
                         [](const auto& info) { return std::string(suite_name(info.param)); });

TEST(Sampling, CorporaAreDeterministicAndSized) {
  const Field f = Field::parse("3^3");
  EXPECT_EQ(lemma_h_samples(f, 13, 1), lemma_h_samples(f, 13, 1));
  EXPECT_NE(lemma_h_samples(f, 13, 1), lemma_h_samples(f, 13, 2));
  EXPECT_EQ(lemma_h_samples(f, 13, 1).size(), 200u);
  for (const auto& h : lemma_h_samples(f, 13, 1)) EXPECT_LE(h.degree(), 14);

  const auto g0 = theorem1_cofactors(f, 13, kDefaultSeed);
  EXPECT_EQ(g0.size(), f.q() + 20);
  for (std::size_t i = f.q(); i < g0.size(); ++i) {
    EXPECT_GE(g0[i].degree(), 1);
    EXPECT_LE(g0[i].degree(), 3);
  }

  const auto pairs = additive_pairs(f, kDefaultSeed);
  EXPECT_GE(pairs.size(), 30u);
  EXPECT_GE(additive_g_samples(f, kDefaultSeed).size(), 10u);
  EXPECT_EQ(trace_g_samples(f, kDefaultSeed).size(), 10u);
  EXPECT_EQ(prime_field_additive(f, 3).size(), 27u);
  EXPECT_EQ(prime_field_polys(f, 2).size(), 27u);
}

TEST(Sampling, PairsCoverTraceWithPrimeFieldA) {
  const Field f = Field::parse("2^4");
  const auto pairs = additive_pairs(f, kDefaultSeed);
  for (const auto& A : prime_field_additive(f, f.n())) {
    bool found = false;
    for (const auto& [a, b] : pairs) found = found || (a == A && b == trace_poly(f));
    EXPECT_TRUE(found) << format_additive(f, A);
  }
}

}  // namespace
}  // namespace ppforge
