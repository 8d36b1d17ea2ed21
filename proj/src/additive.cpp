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

#include "ppforge/additive.hpp"

#include <algorithm>
#include <string>

#include "ppforge/error.hpp"

namespace ppforge {

namespace {

std::vector<Fq> sorted_unique(std::vector<Fq> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// True when values, as a multiset, equal the set target (both given any
// order; target has no repeats).
bool is_permutation_of(std::vector<Fq> values, const std::vector<Fq>& target) {
  std::sort(values.begin(), values.end());
  return values == target;
}

}  // namespace

Fq SubgroupData::right_inverse_of(Fq gamma) const {
  const auto it = std::lower_bound(image.begin(), image.end(), gamma);
  if (it == image.end() || *it != gamma) throw DomainError(std::to_string(gamma.index) + " is not in im B");
  return right_inverse[static_cast<std::size_t>(it - image.begin())];
}

SubgroupData subgroup_data(const Field& field, const AdditivePoly& A, const AdditivePoly& B, PreimageChoice choice) {
  const std::uint64_t q = field.q();
  SubgroupData out;
  // preimage[v] + 1, 0 meaning "not hit".
  std::vector<std::uint64_t> preimage(q, 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    const Fq v = additive_eval(field, B, Fq{i});
    if (v.index == 0) out.kernel.push_back(Fq{i});
    if (preimage[v.index] == 0 || choice == PreimageChoice::greatest) preimage[v.index] = i + 1;
  }
  for (std::uint64_t v = 0; v < q; ++v) {
    if (preimage[v] == 0) continue;
    out.image.push_back(Fq{v});
    out.right_inverse.push_back(Fq{preimage[v] - 1});
  }

  std::vector<Fq> ak;
  ak.reserve(out.kernel.size());
  for (Fq k : out.kernel) ak.push_back(additive_eval(field, A, k));
  out.a_kernel_image = sorted_unique(std::move(ak));

  std::vector<bool> covered(q, false);
  for (std::uint64_t i = 0; i < q; ++i) {
    if (covered[i]) continue;
    out.coset_reps.push_back(Fq{i});
    for (Fq k : out.a_kernel_image) covered[field.add(Fq{i}, k).index] = true;
  }
  return out;
}

FqPoly triple_polynomial(const Field& field, const AdditiveTriple& tr) {
  return add(field, expand(field, tr.A), compose(field, tr.g, expand(field, tr.B)));
}

std::vector<Fq> fhat_on_image(const Field& field, const AdditiveTriple& tr, const SubgroupData& data) {
  std::vector<Fq> out;
  out.reserve(data.image.size());
  for (std::size_t i = 0; i < data.image.size(); ++i) {
    out.push_back(field.add(eval(field, tr.g, data.image[i]), additive_eval(field, tr.A, data.right_inverse[i])));
  }
  return out;
}

ConditionReport proposition_check(const Field& field, const AdditiveTriple& tr, PreimageChoice choice) {
  return proposition_check(field, tr, subgroup_data(field, tr.A, tr.B, choice));
}

ConditionReport proposition_check(const Field& field, const AdditiveTriple& tr, const SubgroupData& data) {
  const std::uint64_t q = field.q();
  std::vector<bool> hit(q, false);
  std::uint64_t count = 0;
  for (Fq v : fhat_on_image(field, tr, data)) {
    for (Fq k : data.a_kernel_image) {
      const auto s = field.add(v, k).index;
      if (!hit[s]) {
        hit[s] = true;
        ++count;
      }
    }
  }
  ConditionReport report;
  report.add("A(ker B) + fhat(im B) = F_q", count == q,
             "sumset has " + std::to_string(count) + " of " + std::to_string(q) + " elements");
  return report;
}

ConditionReport necessary_conditions_check(const Field& field, const AdditiveTriple& tr) {
  return necessary_conditions_check(field, tr, subgroup_data(field, tr.A, tr.B));
}

ConditionReport necessary_conditions_check(const Field& field, const AdditiveTriple& tr, const SubgroupData& data) {
  ConditionReport report;
  const bool a_injective = data.a_kernel_image.size() == data.kernel.size();
  report.add("A is injective on ker B", a_injective,
             "|A(ker B)| = " + std::to_string(data.a_kernel_image.size()) +
                 ", |ker B| = " + std::to_string(data.kernel.size()));
  const auto fhat = sorted_unique(fhat_on_image(field, tr, data));
  report.add("fhat is injective on im B", fhat.size() == data.image.size(),
             "|fhat(im B)| = " + std::to_string(fhat.size()) + ", |im B| = " + std::to_string(data.image.size()));
  return report;
}

ConditionReport commuting_criterion_check(const Field& field, const AdditiveTriple& tr) {
  if (!additive_commutes(field, tr.A, tr.B)) {
    throw ScopeError("A and B do not commute; the commuting-pair criterion does not apply");
  }
  return commuting_criterion_check(field, tr, subgroup_data(field, tr.A, tr.B));
}

ConditionReport commuting_criterion_check(const Field& field, const AdditiveTriple& tr, const SubgroupData& data) {
  ConditionReport report;
  std::vector<Fq> on_kernel;
  for (Fq k : data.kernel) on_kernel.push_back(additive_eval(field, tr.A, k));
  report.add("A permutes ker B", is_permutation_of(std::move(on_kernel), data.kernel));

  std::vector<Fq> on_image;
  for (Fq c : data.image) {
    on_image.push_back(field.add(additive_eval(field, tr.A, c), additive_eval(field, tr.B, eval(field, tr.g, c))));
  }
  report.add("A(x) + B(g(x)) permutes im B", is_permutation_of(std::move(on_image), data.image));
  return report;
}

void validate(const Field& field, const TraceTheoremParams& tp) {
  if (!has_prime_field_coefficients(field, tp.A)) throw ScopeError("A must have all coefficients in F_p");
  if (!has_prime_field_coefficients(field, tp.h)) throw ScopeError("h must have all coefficients in F_p");
}

FqPoly trace_theorem_polynomial(const Field& field, const TraceTheoremParams& tp) {
  validate(field, tp);
  const FqPoly t = expand(field, trace_poly(field));
  return add(field, compose(field, tp.g, t), mul_reduced(field, compose(field, tp.h, t), expand(field, tp.A)));
}

ConditionReport trace_theorem_check(const Field& field, const TraceTheoremParams& tp) {
  validate(field, tp);
  const AdditivePoly T = trace_poly(field);
  const SubgroupData data = subgroup_data(field, tp.A, T);
  ConditionReport report;

  std::vector<Fq> on_kernel;
  for (Fq k : data.kernel) on_kernel.push_back(additive_eval(field, tp.A, k));
  report.add("A permutes ker B", is_permutation_of(std::move(on_kernel), data.kernel));

  std::vector<Fq> prime_field;
  std::vector<Fq> values;
  std::optional<std::string> root;
  for (std::uint64_t c = 0; c < field.p(); ++c) {
    const Fq x{c};
    prime_field.push_back(x);
    const Fq hx = eval(field, tp.h, x);
    values.push_back(field.add(additive_eval(field, T, eval(field, tp.g, x)), field.mul(hx, additive_eval(field, tp.A, x))));
    if (hx.index == 0 && !root) root = "h(" + std::to_string(c) + ") = 0";
  }
  report.add("B(g(x)) + h(x)A(x) permutes F_p", is_permutation_of(std::move(values), prime_field));
  report.add("h has no roots in F_p", !root, root);
  return report;
}

Fq gamma_search(const Field& field) {
  if (field.n() != 2) throw ScopeError("gamma search is defined for F_{p^2} only");
  if (field.p() == 2) throw ScopeError("not applicable in characteristic 2 (-1 = 1)");
  const Fq minus_one = field.neg(field.one());
  for (std::uint64_t i = 1; i < field.q(); ++i) {
    if (field.pow(Fq{i}, field.p() - 1) == minus_one) return Fq{i};
  }
  throw DomainError("no gamma with gamma^(p-1) = -1");  // unreachable for odd p
}

ExampleFamily example_family(const Field& field, const FqPoly& h) {
  if (!has_prime_field_coefficients(field, h)) throw ScopeError("h must have all coefficients in F_p");
  ExampleFamily out;
  out.gamma = gamma_search(field);
  const FqPoly t = expand(field, trace_poly(field));
  out.polynomial = add(field, FqPoly::x(), scale(field, compose(field, h, t), out.gamma));
  out.degree = out.polynomial.degree();
  return out;
}

}  // namespace ppforge
