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

/**
 * @file cyclotomic.hpp
 * @brief Permutation criteria for polynomials that respect the cosets of
 * F_q^* modulo d-th powers.
 *
 * For f(x) = x^u h(x^((q-1)/d)) the value f(a) depends on the coset of a
 * modulo d-th powers only through the induced map
 *
 *     fhat(z) = z^u h(z)^((q-1)/d)   on  mu_d,
 *
 * and f permutes F_q exactly when gcd(u, (q-1)/d) = 1 and fhat permutes
 * mu_d. lemma_check() tests that pair of conditions by enumerating mu_d.
 *
 * theorem1_check() specializes to h(y) = b y^k + g(y) with h_d | g and
 * d > 2, where fhat is the monomial b^((q-1)/d) z^(u + k(q-1)/d) away from
 * z = 1 and the criterion collapses to four arithmetic conditions.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ppforge/field.hpp"
#include "ppforge/poly.hpp"
#include "ppforge/report.hpp"

namespace ppforge {

/// Condition 1: gcd(u, (q-1)/d) = 1. Condition 2: fhat permutes mu_d.
/// Throws DomainError if d does not divide q-1 or u == 0.
ConditionReport lemma_check(const Field& field, const CyclotomicForm& cf);

/// Parameters of f(x) = x^u (b x^(k(q-1)/d) + g(x^((q-1)/d))) with
/// g = h_d * g0, so divisibility by h_d holds by construction.
struct Theorem1Params {
  std::uint64_t d = 3;
  std::uint64_t u = 1;
  std::uint64_t k = 0;
  Fq b{};
  FqPoly g0 = FqPoly::constant(Fq{1});

  /// Recovers g0 from an explicit g; throws ScopeError when h_d does not
  /// divide g.
  static Theorem1Params from_g(const Field& field, std::uint64_t d, std::uint64_t u, std::uint64_t k, Fq b,
                               const FqPoly& g);
};

/// Throws ScopeError unless d > 2, d | q-1 and u >= 1.
void validate(const Field& field, const Theorem1Params& params);

/// g = h_d * g0.
FqPoly theorem1_g(const Field& field, const Theorem1Params& params);

/// The expanded, exponent-reduced f.
FqPoly theorem1_polynomial(const Field& field, const Theorem1Params& params);

/// The polynomial as a CyclotomicForm (h(y) = b y^k + g(y)).
CyclotomicForm theorem1_form(const Field& field, const Theorem1Params& params);

/// The four conditions, in order. Condition 4 is recorded false (with a
/// witness) when b = 0.
ConditionReport theorem1_check(const Field& field, const Theorem1Params& params);

/// fhat(z) = z^u (b z^k + g(z))^((q-1)/d) for every z in mu_d, in the order
/// of Field::roots_of_unity.
std::vector<std::pair<Fq, Fq>> fhat_on_mu_d(const Field& field, const Theorem1Params& params);

struct Theorem1Bounds {
  std::vector<std::uint64_t> u_values{1};
  std::vector<std::uint64_t> k_values{0};
  std::vector<FqPoly> g0_values{FqPoly::constant(Fq{1})};
};

/// Receives each passing tuple with its expanded polynomial; return false
/// to stop the enumeration.
using Theorem1Sink = std::function<bool(const Theorem1Params&, const FqPoly&)>;

/// Visits, in order of (u, k, b index, g0 position), every tuple whose
/// four-condition verdict is true. u and k values are sorted and
/// deduplicated first; b ranges over all of F_q.
void theorem1_generate(const Field& field, std::uint64_t d, const Theorem1Bounds& bounds, const Theorem1Sink& sink);

std::vector<std::pair<Theorem1Params, FqPoly>> theorem1_generate(const Field& field, std::uint64_t d,
                                                                 const Theorem1Bounds& bounds);

/// f(x) = a x^i (x^((q-1)/2) + 1) - b x^j (x^((q-1)/2) - 1), q odd.
struct HermiteParams {
  Fq a{1};
  Fq b{1};
  std::uint64_t i = 1;
  std::uint64_t j = 1;
};

struct HermiteFamily {
  FqPoly polynomial;
  /// 2a square, 2b square, gcd(ij, q-1) = 1. Sufficient, not necessary.
  ConditionReport sufficient;
};

/// Throws ScopeError for even q and DomainError for a or b zero or i, j zero.
HermiteFamily hermite_family(const Field& field, const HermiteParams& hp);

/// 2a x^i on squares, 2b x^j on non-squares, 0 at 0.
Fq hermite_piecewise(const Field& field, const HermiteParams& hp, Fq x);

}  // namespace ppforge
