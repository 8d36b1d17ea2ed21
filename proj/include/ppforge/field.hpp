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
 * @file field.hpp
 * @brief Exact arithmetic in F_p and F_{p^n}.
 *
 * A field is identified by (p, n). Its modulus is the first monic
 * irreducible polynomial of degree n over F_p when the non-leading
 * coefficients c_0 + c_1 p + ... + c_{n-1} p^{n-1} are enumerated in
 * increasing order, so every process builds the same F_{p^n}.
 *
 * Elements are stored as their index in [0, q): the base-p digits of the
 * index are the coefficients of 1, t, t^2, ... where t is the class of x
 * modulo the field polynomial. Index 0 is zero, index 1 is one, and the
 * prime subfield is exactly the indices below p.
 *
 * Small fields (q <= 1024) get full addition and multiplication tables;
 * fields up to 2^20 elements get discrete log/antilog tables for the
 * multiplicative group. Anything larger falls back to schoolbook
 * arithmetic on coefficient vectors. All three tiers give identical
 * results.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppforge {

/// An element of some F_q, by index. Meaningless without its Field.
struct Fq {
  std::uint64_t index = 0;

  friend constexpr auto operator<=>(Fq, Fq) = default;
};

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;   // n+1 coefficients, low to high, monic
  std::vector<std::uint64_t> p_powers;  // p^0 .. p^n
  Fq primitive;

  // Log tier: exp has 2(q-1) entries so log[a]+log[b] needs no reduction.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;

  // Table tier: row-major q x q.
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
};

Fq add_digits(const FieldData& f, Fq a, Fq b) noexcept;
Fq neg_digits(const FieldData& f, Fq a) noexcept;
Fq mul_schoolbook(const FieldData& f, Fq a, Fq b);
Fq pow_square_multiply(const FieldData& f, Fq a, std::uint64_t e);

}  // namespace detail

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
  static constexpr std::uint64_t kTableLimit = 1024;
  static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

  /// Builds the canonical F_{p^n}. Throws DomainError if p is not prime,
  /// n is zero, or p^n exceeds kMaxOrder.
  static Field make(std::uint64_t p, unsigned n);

  /// Parses "p" or "p^n" (whitespace allowed around tokens).
  static Field parse(std::string_view designation);

  std::uint64_t p() const noexcept { return data_->p; }
  unsigned n() const noexcept { return data_->n; }
  std::uint64_t q() const noexcept { return data_->q; }

  /// Monic field polynomial, coefficients low to high. For n == 1 this is x.
  std::span<const std::uint64_t> modulus() const noexcept { return data_->modulus; }

  /// "p" for prime fields, "p^n" otherwise.
  std::string designation() const;

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  /// The class of t (index p). Equals zero when n == 1 since the modulus is x.
  Fq generator() const noexcept { return data_->n == 1 ? Fq{0} : Fq{data_->p}; }

  /// Range-checked conversion from an index.
  Fq element(std::uint64_t index) const;
  /// Image of an integer in the prime subfield.
  Fq embed(std::int64_t value) const noexcept;
  bool contains(Fq a) const noexcept { return a.index < data_->q; }
  bool in_prime_subfield(Fq a) const noexcept { return a.index < data_->p; }

  std::vector<std::uint64_t> coefficients(Fq a) const;
  Fq from_coefficients(std::span<const std::uint64_t> coeffs) const;

  Fq add(Fq a, Fq b) const noexcept {
    if (!data_->add.empty()) return Fq{data_->add[a.index * data_->q + b.index]};
    return detail::add_digits(*data_, a, b);
  }

  Fq neg(Fq a) const noexcept {
    if (!data_->neg.empty()) return Fq{data_->neg[a.index]};
    return detail::neg_digits(*data_, a);
  }

  Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }

  Fq mul(Fq a, Fq b) const {
    if (!data_->mul.empty()) return Fq{data_->mul[a.index * data_->q + b.index]};
    if (!data_->log.empty()) {
      if (a.index == 0 || b.index == 0) return Fq{0};
      return Fq{data_->exp[data_->log[a.index] + data_->log[b.index]]};
    }
    return detail::mul_schoolbook(*data_, a, b);
  }

  /// Square-and-multiply (or a log-table shortcut). 0^0 is 1. The exponent
  /// is not reduced by the caller; any e is accepted.
  Fq pow(Fq a, std::uint64_t e) const;

  /// Throws DomainError for a == 0.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

  /// a^(p^k).
  Fq frobenius(Fq a, unsigned k = 1) const;

  /// Least-index element of multiplicative order q-1.
  Fq primitive_element() const noexcept { return data_->primitive; }

  /// a^((q-1)/d) == 1. Throws DomainError if a == 0 or d does not divide q-1.
  bool is_dth_power(Fq a, std::uint64_t d) const;

  /// The d-th roots of unity as w^(j(q-1)/d), j = 0..d-1, w the primitive
  /// element. Throws DomainError if d does not divide q-1.
  std::vector<Fq> roots_of_unity(std::uint64_t d) const;

  /// Square test used by the quadratic-character branches (a^((q-1)/2) == 1).
  bool is_square(Fq a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.data_->p == b.data_->p && a.data_->n == b.data_->n;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

/// Deterministic primality by trial division (p < 2^32 here).
bool is_prime(std::uint64_t n) noexcept;

/// Ascending list of positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Exact irreducibility over F_p of a monic polynomial given low to high.
/// Degree 1 is irreducible; degree 0 is not.
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p);

}  // namespace ppforge
