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
 * @file poly.hpp
 * @brief Dense univariate polynomials over F_q and p-linearized polynomials.
 *
 * FqPoly is a plain coefficient vector; equality is coefficient equality.
 * Two polynomials may induce the same map F_q -> F_q without being equal
 * (x^q and x, say). reduce_exponents() gives the canonical representative
 * of the induced map: the remainder modulo x^q - x, which sends every
 * exponent e > 0 into [1, q-1] and leaves constants alone.
 */

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppforge/field.hpp"

namespace ppforge {

class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(std::vector<Fq> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static FqPoly constant(Fq c) { return FqPoly({c}); }
  static FqPoly monomial(Fq c, std::uint64_t exponent);
  static FqPoly x() { return monomial(Fq{1}, 1); }

  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Fq> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Fq coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Fq{0}; }
  /// Number of nonzero coefficients.
  std::size_t term_count() const noexcept;

  friend bool operator==(const FqPoly&, const FqPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
  }

  std::vector<Fq> coeffs_;
};

/// Horner evaluation.
Fq eval(const Field& field, const FqPoly& f, Fq a);

FqPoly add(const Field& field, const FqPoly& a, const FqPoly& b);
FqPoly sub(const Field& field, const FqPoly& a, const FqPoly& b);
FqPoly scale(const Field& field, const FqPoly& a, Fq c);
/// Exact product (no exponent reduction).
FqPoly mul(const Field& field, const FqPoly& a, const FqPoly& b);
/// Product modulo x^q - x; inputs of any degree.
FqPoly mul_reduced(const Field& field, const FqPoly& a, const FqPoly& b);
/// x^shift * a, reduced modulo x^q - x.
FqPoly shift_reduced(const Field& field, const FqPoly& a, std::uint64_t shift);

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<FqPoly, FqPoly> divmod(const Field& field, const FqPoly& a, const FqPoly& b);

/// e > 0 goes to ((e-1) mod (q-1)) + 1; e = 0 stays 0.
std::uint64_t reduced_exponent(std::uint64_t q, std::uint64_t e) noexcept;

/// Canonical representative of the induced map (degree < q).
FqPoly reduce_exponents(const Field& field, const FqPoly& f);

/// f(g(x)), reduced.
FqPoly compose(const Field& field, const FqPoly& f, const FqPoly& g);

/// h(x^e), reduced.
FqPoly substitute_power(const Field& field, const FqPoly& h, std::uint64_t e);

/// x^(d-1) + ... + x + 1. Requires d >= 1.
FqPoly h_d_poly(std::uint64_t d);

/// True when every coefficient lies in the prime subfield.
bool has_prime_field_coefficients(const Field& field, const FqPoly& f) noexcept;

/// sum_i a_i x^(p^i), stored by the a_i and never expanded implicitly.
class AdditivePoly {
 public:
  AdditivePoly() = default;
  explicit AdditivePoly(std::vector<Fq> add_coeffs) : coeffs_(std::move(add_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
  }

  static AdditivePoly identity() { return AdditivePoly({Fq{1}}); }

  /// Coefficient a_i of x^(p^i); zero past the stored length.
  Fq coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Fq{0}; }
  std::span<const Fq> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const AdditivePoly&, const AdditivePoly&) = default;

 private:
  std::vector<Fq> coeffs_;
};

/// x^(q/p) + ... + x^p + x.
AdditivePoly trace_poly(const Field& field);

/// sum_i a_i * a^(p^i).
Fq additive_eval(const Field& field, const AdditivePoly& A, Fq a);

/// Explicit expansion into an FqPoly, reduced modulo x^q - x.
FqPoly expand(const Field& field, const AdditivePoly& A);

/// Reads an FqPoly as an additive polynomial. Returns false when some
/// nonzero term has an exponent that is not a power of p.
bool to_additive(const Field& field, const FqPoly& f, AdditivePoly& out);

bool has_prime_field_coefficients(const Field& field, const AdditivePoly& A) noexcept;

/// A(B(a)) == B(A(a)) for every a in F_q.
bool additive_commutes(const Field& field, const AdditivePoly& A, const AdditivePoly& B);

/// f(x) = x^u * h(x^((q-1)/d)).
struct CyclotomicForm {
  std::uint64_t u = 1;
  std::uint64_t d = 1;
  FqPoly h;
};

/// Throws DomainError unless d | q-1 and u >= 1.
void validate(const Field& field, const CyclotomicForm& cf);

/// Expanded and reduced x^u h(x^((q-1)/d)).
FqPoly expand_cyclotomic(const Field& field, const CyclotomicForm& cf);

}  // namespace ppforge
