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
 * @file additive.hpp
 * @brief Permutation criteria for A(x) + g(B(x)) with A, B additive.
 *
 * B is a homomorphism of (F_q, +), so F_q splits into cosets of ker B and
 * f(a + k) = f(a) + A(k) for k in ker B. Everything is decided on the
 * finite sets ker B, im B and the subgroup A(ker B), which subgroup_data()
 * computes by exhaustive evaluation.
 *
 * The right inverse of B is a lookup table on im B, not a polynomial;
 * only its values on im B enter any criterion.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "ppforge/field.hpp"
#include "ppforge/poly.hpp"
#include "ppforge/report.hpp"

namespace ppforge {

/// f(x) = A(x) + g(B(x)).
struct AdditiveTriple {
  AdditivePoly A;
  AdditivePoly B;
  FqPoly g;
};

/// Which preimage the right-inverse table stores for each point of im B.
enum class PreimageChoice { least, greatest };

struct SubgroupData {
  std::vector<Fq> kernel;          ///< ker B, ascending
  std::vector<Fq> image;           ///< im B, ascending
  std::vector<Fq> right_inverse;   ///< right_inverse[i] maps to image[i] under B
  std::vector<Fq> a_kernel_image;  ///< A(ker B), ascending
  std::vector<Fq> coset_reps;      ///< least index of each coset of A(ker B)

  /// Table lookup; throws DomainError if gamma is not in im B.
  Fq right_inverse_of(Fq gamma) const;
};

SubgroupData subgroup_data(const Field& field, const AdditivePoly& A, const AdditivePoly& B,
                           PreimageChoice choice = PreimageChoice::least);

/// A(x) + g(B(x)), reduced.
FqPoly triple_polynomial(const Field& field, const AdditiveTriple& tr);

/// fhat(gamma) = g(gamma) + A(Bhat(gamma)) for gamma in im B, aligned with
/// data.image.
std::vector<Fq> fhat_on_image(const Field& field, const AdditiveTriple& tr, const SubgroupData& data);

/// Single condition: A(ker B) + fhat(im B) = F_q.
ConditionReport proposition_check(const Field& field, const AdditiveTriple& tr,
                                  PreimageChoice choice = PreimageChoice::least);
ConditionReport proposition_check(const Field& field, const AdditiveTriple& tr, const SubgroupData& data);

/// A injective on ker B; fhat injective on im B. Both hold whenever f
/// permutes F_q.
ConditionReport necessary_conditions_check(const Field& field, const AdditiveTriple& tr);
ConditionReport necessary_conditions_check(const Field& field, const AdditiveTriple& tr, const SubgroupData& data);

/// For commuting A and B: A permutes ker B; A(x) + B(g(x)) permutes im B.
/// Throws ScopeError when A and B do not commute.
ConditionReport commuting_criterion_check(const Field& field, const AdditiveTriple& tr);
/// Same, trusting the caller that A and B commute.
ConditionReport commuting_criterion_check(const Field& field, const AdditiveTriple& tr, const SubgroupData& data);

/// f(x) = g(T(x)) + h(T(x)) A(x) with T the trace, A and h over F_p.
struct TraceTheoremParams {
  FqPoly g;
  AdditivePoly A = AdditivePoly::identity();
  FqPoly h = FqPoly::constant(Fq{1});
};

/// Throws ScopeError if A or h has a coefficient outside F_p.
void validate(const Field& field, const TraceTheoremParams& tp);

FqPoly trace_theorem_polynomial(const Field& field, const TraceTheoremParams& tp);

/// (i) A permutes ker T, (ii) T(g(x)) + h(x) A(x) permutes F_p,
/// (iii) h has no roots in F_p.
ConditionReport trace_theorem_check(const Field& field, const TraceTheoremParams& tp);

/// Least-index gamma in F_{p^2} with gamma^(p-1) = -1. Throws ScopeError
/// unless n = 2 and p is odd.
Fq gamma_search(const Field& field);

struct ExampleFamily {
  Fq gamma;
  FqPoly polynomial;
  std::int64_t degree = -1;
};

/// x + gamma h(x^p + x) over F_{p^2}; h must lie in F_p[x].
ExampleFamily example_family(const Field& field, const FqPoly& h);

}  // namespace ppforge
