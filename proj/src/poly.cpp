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

#include "ppforge/poly.hpp"

#include <algorithm>
#include <string>

#include "ppforge/error.hpp"

namespace ppforge {

FqPoly FqPoly::monomial(Fq c, std::uint64_t exponent) {
  if (c.index == 0) return {};
  std::vector<Fq> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return FqPoly(std::move(coeffs));
}

std::size_t FqPoly::term_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Fq c) { return c.index != 0; }));
}

Fq eval(const Field& field, const FqPoly& f, Fq a) {
  const auto c = f.coefficients();
  Fq acc{0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.add(field.mul(acc, a), *it);
  return acc;
}

FqPoly add(const Field& field, const FqPoly& a, const FqPoly& b) {
  std::vector<Fq> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(out));
}

FqPoly sub(const Field& field, const FqPoly& a, const FqPoly& b) {
  std::vector<Fq> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(a.coeff(i), b.coeff(i));
  return FqPoly(std::move(out));
}

FqPoly scale(const Field& field, const FqPoly& a, Fq c) {
  std::vector<Fq> out(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : out) x = field.mul(x, c);
  return FqPoly(std::move(out));
}

FqPoly mul(const Field& field, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto x = a.coefficients();
  const auto y = b.coefficients();
  std::vector<Fq> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].index == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = field.add(out[i + j], field.mul(x[i], y[j]));
  }
  return FqPoly(std::move(out));
}

std::uint64_t reduced_exponent(std::uint64_t q, std::uint64_t e) noexcept {
  if (e == 0) return 0;
  return (e - 1) % (q - 1) + 1;
}

FqPoly reduce_exponents(const Field& field, const FqPoly& f) {
  const std::uint64_t q = field.q();
  if (f.degree() < static_cast<std::int64_t>(q)) return f;
  std::vector<Fq> out(q);
  const auto c = f.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].index == 0) continue;
    auto& slot = out[reduced_exponent(q, e)];
    slot = field.add(slot, c[e]);
  }
  return FqPoly(std::move(out));
}

FqPoly mul_reduced(const Field& field, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const FqPoly ra = reduce_exponents(field, a);
  const FqPoly rb = reduce_exponents(field, b);
  const std::uint64_t q = field.q();
  const auto x = ra.coefficients();
  const auto y = rb.coefficients();
  std::vector<Fq> out(std::min<std::uint64_t>(q, x.size() + y.size() - 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].index == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].index == 0) continue;
      // i + j <= 2q - 2, so one subtraction of q - 1 suffices.
      std::uint64_t e = i + j;
      if (e >= q) e -= q - 1;
      out[e] = field.add(out[e], field.mul(x[i], y[j]));
    }
  }
  return FqPoly(std::move(out));
}

FqPoly shift_reduced(const Field& field, const FqPoly& a, std::uint64_t shift) {
  if (a.is_zero()) return {};
  const std::uint64_t q = field.q();
  const auto c = a.coefficients();
  std::vector<Fq> out(std::min<std::uint64_t>(q, c.size() + shift));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].index == 0) continue;
    auto& slot = out[reduced_exponent(q, i + shift)];
    slot = field.add(slot, c[i]);
  }
  return FqPoly(std::move(out));
}

std::pair<FqPoly, FqPoly> divmod(const Field& field, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Fq> rem(a.coefficients().begin(), a.coefficients().end());
  const auto divisor = b.coefficients();
  const std::size_t db = divisor.size() - 1;
  if (rem.size() <= db) return {FqPoly{}, a};
  const Fq lead_inv = field.inv(divisor.back());
  std::vector<Fq> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Fq factor = field.mul(rem[k], lead_inv);
    if (factor.index == 0) continue;
    quot[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = field.sub(rem[k - db + i], field.mul(factor, divisor[i]));
    }
  }
  return {FqPoly(std::move(quot)), FqPoly(std::move(rem))};
}

FqPoly compose(const Field& field, const FqPoly& f, const FqPoly& g) {
  const FqPoly rf = reduce_exponents(field, f);
  const FqPoly rg = reduce_exponents(field, g);
  const auto c = rf.coefficients();
  FqPoly acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = add(field, mul_reduced(field, acc, rg), FqPoly::constant(*it));
  }
  return acc;
}

FqPoly substitute_power(const Field& field, const FqPoly& h, std::uint64_t e) {
  if (h.is_zero()) return {};
  const std::uint64_t q = field.q();
  const auto c = h.coefficients();
  std::uint64_t top = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].index != 0) top = std::max(top, reduced_exponent(q, i * e));
  }
  std::vector<Fq> out(top + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].index == 0) continue;
    auto& slot = out[reduced_exponent(q, i * e)];
    slot = field.add(slot, c[i]);
  }
  return FqPoly(std::move(out));
}

FqPoly h_d_poly(std::uint64_t d) {
  if (d == 0) throw DomainError("h_d requires d >= 1");
  return FqPoly(std::vector<Fq>(d, Fq{1}));
}

bool has_prime_field_coefficients(const Field& field, const FqPoly& f) noexcept {
  const auto c = f.coefficients();
  return std::all_of(c.begin(), c.end(), [&](Fq a) { return field.in_prime_subfield(a); });
}

AdditivePoly trace_poly(const Field& field) { return AdditivePoly(std::vector<Fq>(field.n(), Fq{1})); }

Fq additive_eval(const Field& field, const AdditivePoly& A, Fq a) {
  Fq acc{0};
  Fq frob = a;
  const auto c = A.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].index != 0) acc = field.add(acc, field.mul(c[i], frob));
    if (i + 1 < c.size()) frob = field.frobenius(frob);
  }
  return acc;
}

FqPoly expand(const Field& field, const AdditivePoly& A) {
  const std::uint64_t q = field.q();
  const auto c = A.coefficients();
  std::uint64_t e = 1;
  std::vector<Fq> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].index != 0) {
      if (out.size() <= e) out.resize(e + 1);
      out[e] = field.add(out[e], c[i]);
    }
    e = reduced_exponent(q, e * field.p());
  }
  return FqPoly(std::move(out));
}

bool to_additive(const Field& field, const FqPoly& f, AdditivePoly& out) {
  std::vector<Fq> coeffs;
  const auto c = f.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].index == 0) continue;
    std::size_t i = 0;
    std::uint64_t power = 1;
    while (power < e) {
      power *= field.p();
      ++i;
    }
    if (power != e) return false;
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] = field.add(coeffs[i], c[e]);
  }
  out = AdditivePoly(std::move(coeffs));
  return true;
}

bool has_prime_field_coefficients(const Field& field, const AdditivePoly& A) noexcept {
  const auto c = A.coefficients();
  return std::all_of(c.begin(), c.end(), [&](Fq a) { return field.in_prime_subfield(a); });
}

bool additive_commutes(const Field& field, const AdditivePoly& A, const AdditivePoly& B) {
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    const Fq a{i};
    if (additive_eval(field, A, additive_eval(field, B, a)) != additive_eval(field, B, additive_eval(field, A, a))) {
      return false;
    }
  }
  return true;
}

void validate(const Field& field, const CyclotomicForm& cf) {
  if (cf.d == 0 || (field.q() - 1) % cf.d != 0) {
    throw DomainError("d = " + std::to_string(cf.d) + " does not divide q-1 = " + std::to_string(field.q() - 1));
  }
  if (cf.u == 0) throw DomainError("u must be positive");
}

FqPoly expand_cyclotomic(const Field& field, const CyclotomicForm& cf) {
  validate(field, cf);
  return shift_reduced(field, substitute_power(field, cf.h, (field.q() - 1) / cf.d), cf.u);
}

}  // namespace ppforge
