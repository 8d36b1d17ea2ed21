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

#include "ppforge/additive.hpp"
#include "ppforge/error.hpp"
#include "ppforge/oracle.hpp"
#include "ppforge/poly_text.hpp"

namespace ppforge {
namespace {

FqPoly P(const Field& f, const char* text) { return parse_poly(f, text); }
AdditivePoly A(const Field& f, const char* text) { return parse_additive(f, text); }

std::vector<Fq> idx(std::initializer_list<std::uint64_t> v) {
  std::vector<Fq> out;
  for (auto i : v) out.push_back(Fq{i});
  return out;
}

AdditivePoly random_additive(const Field& f, std::mt19937_64& rng) {
  std::vector<Fq> c(f.n());
  for (auto& x : c) x = Fq{rng() % f.q()};
  return AdditivePoly(std::move(c));
}

// --- subgroups ---------------------------------------------------------------

TEST(Subgroups, TraceOverF9) {
  const Field f = Field::parse("3^2");
  const auto data = subgroup_data(f, AdditivePoly::identity(), trace_poly(f));
  EXPECT_EQ(data.kernel, idx({0, 3, 6}));  // {0, t, 2t}
  EXPECT_EQ(data.image, idx({0, 1, 2}));
}

TEST(Subgroups, IdentityAndFrobeniusMinusOne) {
  const Field f = Field::parse("7");
  const auto id = subgroup_data(f, AdditivePoly::identity(), AdditivePoly::identity());
  EXPECT_EQ(id.kernel, idx({0}));
  EXPECT_EQ(id.image.size(), 7u);
  // x^p - x on F_p
  const auto zero = subgroup_data(f, AdditivePoly::identity(), AdditivePoly({Fq{6}, Fq{1}}));
  EXPECT_EQ(zero.kernel.size(), 7u);
  EXPECT_EQ(zero.image, idx({0}));
}

TEST(Subgroups, RankNullityAndRightInverse) {
  std::mt19937_64 rng(21);
  for (const char* name : {"2^4", "3^3", "5^2"}) {
    const Field f = Field::parse(name);
    for (int r = 0; r < 40; ++r) {
      const AdditivePoly B = random_additive(f, rng);
      for (auto choice : {PreimageChoice::least, PreimageChoice::greatest}) {
        const auto data = subgroup_data(f, AdditivePoly::identity(), B, choice);
        EXPECT_EQ(data.kernel.size() * data.image.size(), f.q());
        ASSERT_EQ(data.right_inverse.size(), data.image.size());
        for (std::size_t i = 0; i < data.image.size(); ++i) {
          EXPECT_EQ(additive_eval(f, B, data.right_inverse[i]), data.image[i]);
          EXPECT_EQ(data.right_inverse_of(data.image[i]), data.right_inverse[i]);
        }
        EXPECT_EQ(data.coset_reps.size() * data.a_kernel_image.size(), f.q());
      }
    }
  }
}

TEST(Subgroups, RightInverseOutsideImageThrows) {
  const Field f = Field::parse("3^2");
  const auto data = subgroup_data(f, AdditivePoly::identity(), trace_poly(f));
  EXPECT_THROW(data.right_inverse_of(Fq{4}), DomainError);
}

// --- proposition -------------------------------------------------------------

TEST(Proposition, Identity) {
  const Field f = Field::parse("5");
  const AdditiveTriple tr{AdditivePoly::identity(), AdditivePoly::identity(), FqPoly()};
  EXPECT_EQ(triple_polynomial(f, tr), FqPoly::x());
  EXPECT_TRUE(proposition_check(f, tr).verdict());
}

TEST(Proposition, ExampleOverF9) {
  const Field f = Field::parse("3^2");
  const AdditiveTriple tr{AdditivePoly::identity(), trace_poly(f), P(f, "3*x^2")};
  EXPECT_EQ(triple_polynomial(f, tr), P(f, "3*x^6+6*x^4+3*x^2+x"));
  EXPECT_TRUE(proposition_check(f, tr).verdict());
  EXPECT_TRUE(is_permutation(f, triple_polynomial(f, tr)));
}

TEST(Proposition, ZeroAWithNontrivialKernelFails) {
  const Field f = Field::parse("3^2");
  std::mt19937_64 rng(22);
  int seen = 0;
  while (seen < 30) {
    const AdditivePoly B = random_additive(f, rng);
    if (subgroup_data(f, AdditivePoly(), B).kernel.size() == 1) continue;
    ++seen;
    const AdditiveTriple tr{AdditivePoly(), B, FqPoly({Fq{rng() % 9}, Fq{rng() % 9}})};
    const auto report = proposition_check(f, tr);
    EXPECT_FALSE(report.verdict());
    EXPECT_TRUE(report[0].witness.has_value());
  }
}

// With B bijective the image is not too small: f = g(B(x)) permutes when g does.
TEST(Proposition, ZeroAWithBijectiveB) {
  const Field f = Field::parse("3^2");
  const AdditiveTriple tr{AdditivePoly(), AdditivePoly::identity(), P(f, "4*x+1")};
  EXPECT_TRUE(proposition_check(f, tr).verdict());
  EXPECT_TRUE(is_permutation(f, triple_polynomial(f, tr)));
}

TEST(Proposition, AgreesWithOracleAndIgnoresPreimageChoice) {
  std::mt19937_64 rng(23);
  for (const char* name : {"2^3", "3^2", "2^4"}) {
    const Field f = Field::parse(name);
    for (int r = 0; r < 300; ++r) {
      std::vector<Fq> g(1 + rng() % 4);
      for (auto& c : g) c = Fq{rng() % f.q()};
      const AdditiveTriple tr{random_additive(f, rng), random_additive(f, rng), FqPoly(std::move(g))};
      const bool oracle = is_permutation(f, triple_polynomial(f, tr));
      const bool least = proposition_check(f, tr, PreimageChoice::least).verdict();
      ASSERT_EQ(least, oracle) << name;
      ASSERT_EQ(proposition_check(f, tr, PreimageChoice::greatest).verdict(), least);
      if (oracle) {
        EXPECT_TRUE(necessary_conditions_check(f, tr).verdict());
      }
    }
  }
}

// --- necessary conditions ------------------------------------------------------

TEST(NecessaryConditions, IdentityAIsInjective) {
  const Field f = Field::parse("3^2");
  const auto report = necessary_conditions_check(f, {AdditivePoly::identity(), trace_poly(f), FqPoly()});
  EXPECT_TRUE(report[0].holds);
}

TEST(NecessaryConditions, ACollapsingTheKernel) {
  const Field f = Field::parse("3^2");
  const auto report = necessary_conditions_check(f, {trace_poly(f), trace_poly(f), P(f, "x")});
  EXPECT_FALSE(report[0].holds);
  EXPECT_FALSE(report.verdict());
}

// --- commuting pairs -----------------------------------------------------------

TEST(CommutingCriterion, FrobeniusOnTraceKernel) {
  const Field f = Field::parse("3^2");
  const AdditiveTriple tr{A(f, "x^3"), trace_poly(f), FqPoly()};
  const auto report = commuting_criterion_check(f, tr);
  EXPECT_TRUE(report[0].holds);  // t -> 2t, 2t -> t
  EXPECT_EQ(additive_eval(f, tr.A, Fq{3}), Fq{6});
}

TEST(CommutingCriterion, IdentityAAndTraceReduceToPrimeField) {
  const Field f = Field::parse("5^2");
  for (std::uint64_t g0 = 0; g0 < 25; ++g0) {
    for (std::uint64_t g1 = 0; g1 < 25; g1 += 3) {
      const AdditiveTriple tr{AdditivePoly::identity(), trace_poly(f), FqPoly({Fq{g0}, Fq{g1}})};
      std::vector<bool> hit(5, false);
      bool perm = true;
      for (std::uint64_t x = 0; x < 5; ++x) {
        const Fq v = f.add(Fq{x}, additive_eval(f, tr.B, eval(f, tr.g, Fq{x})));
        perm = perm && !hit[v.index];
        hit[v.index] = true;
      }
      EXPECT_EQ(commuting_criterion_check(f, tr).verdict(), perm);
      EXPECT_EQ(perm, is_permutation(f, triple_polynomial(f, tr)));
    }
  }
}

TEST(CommutingCriterion, NonCommutingPairIsRejected) {
  const Field f = Field::parse("3^2");
  EXPECT_THROW(commuting_criterion_check(f, {A(f, "3*x"), A(f, "x^3"), FqPoly()}), ScopeError);
}

// --- trace construction ----------------------------------------------------------

TEST(TraceTheorem, ExampleOverF9) {
  const Field f = Field::parse("3^2");
  const TraceTheoremParams tp{FqPoly(), AdditivePoly::identity(), P(f, "x^2+1")};
  const auto report = trace_theorem_check(f, tp);
  ASSERT_EQ(report.size(), 3u);
  EXPECT_TRUE(report[0].holds);
  EXPECT_TRUE(report[1].holds);
  EXPECT_TRUE(report[2].holds);
  const FqPoly poly = trace_theorem_polynomial(f, tp);
  const FqPoly direct = mul_reduced(f, add(f, mul(f, P(f, "x^3+x"), P(f, "x^3+x")), FqPoly::constant(Fq{1})), FqPoly::x());
  EXPECT_EQ(poly, direct);
  EXPECT_TRUE(is_permutation(f, poly));
}

TEST(TraceTheorem, RootOfH) {
  const Field f = Field::parse("3^2");
  const auto report = trace_theorem_check(f, {FqPoly(), AdditivePoly::identity(), FqPoly::x()});
  EXPECT_FALSE(report[2].holds);
  EXPECT_EQ(report[2].witness.value_or(""), "h(0) = 0");
}

TEST(TraceTheorem, IdentityCase) {
  const Field f = Field::parse("2^3");
  EXPECT_EQ(trace_theorem_polynomial(f, {FqPoly(), AdditivePoly::identity(), FqPoly::constant(Fq{1})}), FqPoly::x());
}

TEST(TraceTheorem, ScopeErrors) {
  const Field f = Field::parse("3^2");
  EXPECT_THROW(trace_theorem_check(f, {FqPoly(), A(f, "3*x"), FqPoly::constant(Fq{1})}), ScopeError);
  EXPECT_THROW(trace_theorem_check(f, {FqPoly(), AdditivePoly::identity(), P(f, "4*x")}), ScopeError);
}

// --- example family --------------------------------------------------------------

TEST(GammaSearch, Values) {
  // Least index with gamma^(p-1) = -1, by independent scan.
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Field f = Field::make(p, 2);
    EXPECT_EQ(gamma_search(f), Fq{p}) << p;
    EXPECT_EQ(f.pow(gamma_search(f), p - 1), f.neg(f.one()));
  }
  EXPECT_THROW(gamma_search(Field::parse("2^2")), ScopeError);
  EXPECT_THROW(gamma_search(Field::parse("3^3")), ScopeError);
}

TEST(ExampleFamily, SquareOverF9) {
  const Field f = Field::parse("3^2");
  const auto ex = example_family(f, P(f, "x^2"));
  EXPECT_EQ(ex.gamma, Fq{3});
  EXPECT_EQ(ex.polynomial, P(f, "3*x^6+6*x^4+3*x^2+x"));
  EXPECT_EQ(ex.degree, 6);
  EXPECT_TRUE(is_permutation(f, ex.polynomial));
}

TEST(ExampleFamily, ZeroHIsIdentity) {
  const Field f = Field::parse("5^2");
  EXPECT_EQ(example_family(f, FqPoly()).polynomial, FqPoly::x());
}

TEST(ExampleFamily, DegreeTwoP) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Field f = Field::make(p, 2);
    const auto ex = example_family(f, P(f, "x^2"));
    EXPECT_EQ(ex.degree, static_cast<std::int64_t>(2 * p));
    EXPECT_TRUE(is_permutation(f, ex.polynomial)) << p;
  }
}

TEST(ExampleFamily, RequiresPrimeFieldH) {
  const Field f = Field::parse("3^2");
  EXPECT_THROW(example_family(f, P(f, "3*x")), ScopeError);
}

}  // namespace
}  // namespace ppforge
