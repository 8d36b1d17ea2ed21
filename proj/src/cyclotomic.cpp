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

#include "ppforge/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ppforge/error.hpp"

namespace ppforge {

namespace {

std::string idx(Fq a) { return std::to_string(a.index); }

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Reduced exponent of x^(k * (q-1)/d); (q-1) = d * ((q-1)/d).
std::uint64_t coset_exponent(std::uint64_t q, std::uint64_t d, std::uint64_t k) {
  if (k == 0) return 0;
  const std::uint64_t r = (k % d) * ((q - 1) / d);
  return r == 0 ? q - 1 : r;
}

}  // namespace

ConditionReport lemma_check(const Field& field, const CyclotomicForm& cf) {
  validate(field, cf);
  const std::uint64_t e = (field.q() - 1) / cf.d;
  ConditionReport report;

  const std::uint64_t g = std::gcd(cf.u, e);
  report.add("gcd(u, (q-1)/d) = 1", g == 1, g == 1 ? std::nullopt : std::optional("gcd = " + std::to_string(g)));

  // Nonzero values of fhat lie in mu_d automatically, so a bijection of
  // mu_d is the same as d distinct nonzero values.
  std::vector<std::pair<Fq, Fq>> images;  // (fhat(z), z)
  std::optional<std::string> witness;
  for (Fq z : field.roots_of_unity(cf.d)) {
    const Fq v = field.mul(field.pow(z, cf.u), field.pow(eval(field, cf.h, z), e));
    if (v.index == 0 && !witness) witness = "h vanishes at zeta = " + idx(z);
    images.emplace_back(v, z);
  }
  if (!witness) {
    std::sort(images.begin(), images.end());
    for (std::size_t i = 1; i < images.size(); ++i) {
      if (images[i].first == images[i - 1].first) {
        witness = "fhat(" + idx(images[i - 1].second) + ") = fhat(" + idx(images[i].second) +
                  ") = " + idx(images[i].first);
        break;
      }
    }
  }
  report.add("x^u h(x)^((q-1)/d) permutes mu_d", !witness, witness);
  return report;
}

Theorem1Params Theorem1Params::from_g(const Field& field, std::uint64_t d, std::uint64_t u, std::uint64_t k, Fq b,
                                      const FqPoly& g) {
  if (d == 0) throw ScopeError("d must be positive");
  auto [quot, rem] = divmod(field, g, h_d_poly(d));
  if (!rem.is_zero()) {
    throw ScopeError("g is not divisible by h_" + std::to_string(d) + " (remainder has degree " +
                     std::to_string(rem.degree()) + ")");
  }
  return Theorem1Params{d, u, k, b, std::move(quot)};
}

void validate(const Field& field, const Theorem1Params& params) {
  if (params.d <= 2) {
    throw ScopeError("the four-condition criterion requires d > 2 (got d = " + std::to_string(params.d) + ")");
  }
  if ((field.q() - 1) % params.d != 0) {
    throw ScopeError("d = " + std::to_string(params.d) + " does not divide q-1 = " + std::to_string(field.q() - 1));
  }
  if (params.u == 0) throw ScopeError("u must be positive");
  if (!field.contains(params.b)) throw DomainError("b is not an element of F_" + std::to_string(field.q()));
}

FqPoly theorem1_g(const Field& field, const Theorem1Params& params) {
  return mul(field, h_d_poly(params.d), params.g0);
}

CyclotomicForm theorem1_form(const Field& field, const Theorem1Params& params) {
  validate(field, params);
  // h(y) = b y^k + g(y); y^k only matters on mu_d, so k mod d suffices
  // except that k > 0 must not become the constant term.
  const std::uint64_t k = params.k == 0 ? 0 : (params.k % params.d == 0 ? params.d : params.k % params.d);
  return CyclotomicForm{params.u, params.d, add(field, FqPoly::monomial(params.b, k), theorem1_g(field, params))};
}

FqPoly theorem1_polynomial(const Field& field, const Theorem1Params& params) {
  validate(field, params);
  const std::uint64_t q = field.q();
  const std::uint64_t e = (q - 1) / params.d;
  const FqPoly inner = add(field, FqPoly::monomial(params.b, coset_exponent(q, params.d, params.k)),
                           substitute_power(field, theorem1_g(field, params), e));
  return shift_reduced(field, inner, params.u);
}

ConditionReport theorem1_check(const Field& field, const Theorem1Params& params) {
  validate(field, params);
  const std::uint64_t q = field.q();
  const std::uint64_t e = (q - 1) / params.d;
  ConditionReport report;

  const std::uint64_t g1 = std::gcd(params.u, e);
  report.add("gcd(u, (q-1)/d) = 1", g1 == 1, g1 == 1 ? std::nullopt : std::optional("gcd = " + std::to_string(g1)));

  const std::uint64_t g2 = std::gcd(params.d, params.u + params.k * e);
  report.add("gcd(d, u + k(q-1)/d) = 1", g2 == 1,
             g2 == 1 ? std::nullopt : std::optional("gcd = " + std::to_string(g2)));

  const bool b_nonzero = params.b.index != 0;
  report.add("b != 0", b_nonzero);

  if (!b_nonzero) {
    report.add("1 + g(1)/b is a d-th power in F_q^*", false, "undefined since b = 0");
  } else {
    const Fq g_at_1 = eval(field, theorem1_g(field, params), field.one());
    const Fq c = field.add(field.one(), field.div(g_at_1, params.b));
    if (c.index == 0) {
      report.add("1 + g(1)/b is a d-th power in F_q^*", false, "1 + g(1)/b = 0");
    } else {
      const bool power = field.is_dth_power(c, params.d);
      report.add("1 + g(1)/b is a d-th power in F_q^*", power, "1 + g(1)/b = " + idx(c));
    }
  }
  return report;
}

std::vector<std::pair<Fq, Fq>> fhat_on_mu_d(const Field& field, const Theorem1Params& params) {
  validate(field, params);
  const std::uint64_t e = (field.q() - 1) / params.d;
  const FqPoly g = theorem1_g(field, params);
  std::vector<std::pair<Fq, Fq>> out;
  for (Fq z : field.roots_of_unity(params.d)) {
    const Fq inner = field.add(field.mul(params.b, field.pow(z, params.k)), eval(field, g, z));
    out.emplace_back(z, field.mul(field.pow(z, params.u), field.pow(inner, e)));
  }
  return out;
}

void theorem1_generate(const Field& field, std::uint64_t d, const Theorem1Bounds& bounds, const Theorem1Sink& sink) {
  validate(field, Theorem1Params{d, 1, 0, Fq{1}, FqPoly::constant(Fq{1})});
  auto us = bounds.u_values;
  auto ks = bounds.k_values;
  sort_unique(us);
  sort_unique(ks);
  for (auto u : us) {
    if (u == 0) throw ScopeError("u must be positive");
    for (auto k : ks) {
      for (std::uint64_t bi = 0; bi < field.q(); ++bi) {
        for (const auto& g0 : bounds.g0_values) {
          const Theorem1Params params{d, u, k, Fq{bi}, g0};
          if (!theorem1_check(field, params).verdict()) continue;
          if (!sink(params, theorem1_polynomial(field, params))) return;
        }
      }
    }
  }
}

std::vector<std::pair<Theorem1Params, FqPoly>> theorem1_generate(const Field& field, std::uint64_t d,
                                                                 const Theorem1Bounds& bounds) {
  std::vector<std::pair<Theorem1Params, FqPoly>> out;
  theorem1_generate(field, d, bounds, [&](const Theorem1Params& params, const FqPoly& f) {
    out.emplace_back(params, f);
    return true;
  });
  return out;
}

HermiteFamily hermite_family(const Field& field, const HermiteParams& hp) {
  const std::uint64_t q = field.q();
  if (q % 2 == 0) throw ScopeError("the quadratic-character construction needs odd q");
  if (hp.a.index == 0 || hp.b.index == 0) throw DomainError("a and b must be nonzero");
  if (!field.contains(hp.a) || !field.contains(hp.b)) throw DomainError("a or b is not a field element");
  if (hp.i == 0 || hp.j == 0) throw DomainError("i and j must be positive");
  const std::uint64_t e = (q - 1) / 2;

  // a x^(i+e) + a x^i - b x^(j+e) + b x^j
  FqPoly f = FqPoly::monomial(hp.a, reduced_exponent(q, hp.i + e));
  f = add(field, f, FqPoly::monomial(hp.a, reduced_exponent(q, hp.i)));
  f = sub(field, f, FqPoly::monomial(hp.b, reduced_exponent(q, hp.j + e)));
  f = add(field, f, FqPoly::monomial(hp.b, reduced_exponent(q, hp.j)));

  HermiteFamily out{std::move(f), {}};
  const Fq two = field.embed(2);
  const Fq two_a = field.mul(two, hp.a);
  const Fq two_b = field.mul(two, hp.b);
  out.sufficient.add("2a is a square", field.is_square(two_a), "2a = " + idx(two_a));
  out.sufficient.add("2b is a square", field.is_square(two_b), "2b = " + idx(two_b));
  const std::uint64_t g = std::gcd(hp.i * hp.j, q - 1);
  out.sufficient.add("gcd(ij, q-1) = 1", g == 1, g == 1 ? std::nullopt : std::optional("gcd = " + std::to_string(g)));
  return out;
}

Fq hermite_piecewise(const Field& field, const HermiteParams& hp, Fq x) {
  if (x.index == 0) return field.zero();
  const Fq two = field.embed(2);
  if (field.is_square(x)) return field.mul(field.mul(two, hp.a), field.pow(x, hp.i));
  return field.mul(field.mul(two, hp.b), field.pow(x, hp.j));
}

}  // namespace ppforge
