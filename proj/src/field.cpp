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

#include "ppforge/field.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "ppforge/error.hpp"

namespace ppforge {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Remainder of a modulo the monic polynomial m, both over F_p.
Coeffs rem_monic(Coeffs a, const Coeffs& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  trim(a);
  while (a.size() > deg) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - deg;
    for (std::size_t i = 0; i <= deg; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

// General remainder (b nonzero, not necessarily monic).
Coeffs rem_general(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(b);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  for (auto& c : b) c = c * lead_inv % p;
  return rem_monic(std::move(a), b, p);
}

Coeffs mul_mod_poly(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return rem_monic(std::move(prod), m, p);
}

Coeffs pow_mod_poly(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
  Coeffs result{1};
  base = rem_monic(std::move(base), m, p);
  while (e) {
    if (e & 1) result = mul_mod_poly(result, base, m, p);
    e >>= 1;
    if (e) base = mul_mod_poly(base, base, m, p);
  }
  return result;
}

Coeffs gcd_poly(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem_general(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool checked_pow(std::uint64_t p, unsigned n, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > limit / p) return false;
    q *= p;
  }
  out = q;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_unsigned(std::string_view s, std::string_view what) {
  s = strip(s);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Ben-Or: a monic f of degree n is irreducible iff gcd(x^(p^k) - x, f) = 1
// for k = 1 .. n/2.
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p) {
  Coeffs f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  Coeffs frob{0, 1};
  for (std::size_t k = 1; k <= n / 2; ++k) {
    frob = pow_mod_poly(frob, p, f, p);
    Coeffs diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (gcd_poly(f, diff, p).size() > 1) return false;
  }
  return true;
}

namespace detail {

Fq add_digits(const FieldData& f, Fq a, Fq b) noexcept {
  if (f.p == 2) return Fq{a.index ^ b.index};
  if (f.n == 1) {
    const std::uint64_t s = a.index + b.index;
    return Fq{s >= f.p ? s - f.p : s};
  }
  std::uint64_t out = 0;
  std::uint64_t x = a.index, y = b.index;
  for (unsigned i = 0; i < f.n; ++i) {
    std::uint64_t d = x % f.p + y % f.p;
    if (d >= f.p) d -= f.p;
    out += d * f.p_powers[i];
    x /= f.p;
    y /= f.p;
  }
  return Fq{out};
}

Fq neg_digits(const FieldData& f, Fq a) noexcept {
  if (f.p == 2) return a;
  std::uint64_t out = 0;
  std::uint64_t x = a.index;
  for (unsigned i = 0; i < f.n; ++i) {
    const std::uint64_t d = x % f.p;
    out += (d == 0 ? 0 : f.p - d) * f.p_powers[i];
    x /= f.p;
  }
  return Fq{out};
}

Fq mul_schoolbook(const FieldData& f, Fq a, Fq b) {
  const std::uint64_t p = f.p;
  const unsigned n = f.n;
  if (n == 1) return Fq{a.index * b.index % p};
  // q <= 2^32 bounds n by 32.
  std::array<std::uint64_t, 32> x{}, y{};
  std::array<std::uint64_t, 64> prod{};
  for (unsigned i = 0; i < n; ++i) {
    x[i] = a.index % p;
    a.index /= p;
    y[i] = b.index % p;
    b.index /= p;
  }
  for (unsigned i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (unsigned k = 2 * n - 2; k >= n; --k) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (unsigned i = 0; i < n; ++i) {
      prod[k - n + i] = (prod[k - n + i] + (p - lead) * f.modulus[i]) % p;
    }
    prod[k] = 0;
  }
  std::uint64_t out = 0;
  for (unsigned i = 0; i < n; ++i) out += prod[i] * f.p_powers[i];
  return Fq{out};
}

Fq pow_square_multiply(const FieldData& f, Fq a, std::uint64_t e) {
  Fq result{1};
  while (e) {
    if (e & 1) result = mul_schoolbook(f, result, a);
    e >>= 1;
    if (e) a = mul_schoolbook(f, a, a);
  }
  return result;
}

}  // namespace detail

Field Field::make(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 0;
  if (!checked_pow(p, n, kMaxOrder, q)) {
    throw DomainError(std::to_string(p) + "^" + std::to_string(n) + " exceeds the supported field size 2^32");
  }

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->n = n;
  data->q = q;
  data->p_powers.resize(n + 1);
  data->p_powers[0] = 1;
  for (unsigned i = 1; i <= n; ++i) data->p_powers[i] = data->p_powers[i - 1] * p;

  if (n == 1) {
    data->modulus = {0, 1};
  } else {
    Coeffs candidate(n + 1, 0);
    candidate[n] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < q && !found; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < n; ++i) {
        candidate[i] = rest % p;
        rest /= p;
      }
      // Irreducible polynomials of degree >= 2 have nonzero constant term.
      if (candidate[0] == 0) continue;
      found = is_irreducible(candidate, p);
    }
    data->modulus = candidate;
  }

  if (q == 2) {
    data->primitive = Fq{1};
  } else {
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t idx = 2; idx < q; ++idx) {
      bool primitive = true;
      for (auto r : factors) {
        if (detail::pow_square_multiply(*data, Fq{idx}, (q - 1) / r) == Fq{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        data->primitive = Fq{idx};
        break;
      }
    }
  }

  if (q <= kLogTableLimit) {
    data->exp.resize(2 * (q - 1));
    data->log.assign(q, 0);
    Fq power{1};
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      data->exp[k] = data->exp[k + q - 1] = static_cast<std::uint32_t>(power.index);
      data->log[power.index] = static_cast<std::uint32_t>(k);
      power = detail::mul_schoolbook(*data, power, data->primitive);
    }
  }

  if (q <= kTableLimit) {
    data->add.resize(q * q);
    data->mul.resize(q * q);
    data->neg.resize(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      data->neg[a] = static_cast<std::uint16_t>(detail::neg_digits(*data, Fq{a}).index);
      for (std::uint64_t b = 0; b < q; ++b) {
        data->add[a * q + b] = static_cast<std::uint16_t>(detail::add_digits(*data, Fq{a}, Fq{b}).index);
        const std::uint64_t m = (a == 0 || b == 0) ? 0 : data->exp[data->log[a] + data->log[b]];
        data->mul[a * q + b] = static_cast<std::uint16_t>(m);
      }
    }
  }

  return Field(std::move(data));
}

Field Field::parse(std::string_view designation) {
  const auto caret = designation.find('^');
  if (caret == std::string_view::npos) return make(parse_unsigned(designation, "field"), 1);
  const std::uint64_t p = parse_unsigned(designation.substr(0, caret), "characteristic");
  const std::uint64_t n = parse_unsigned(designation.substr(caret + 1), "extension degree");
  if (n > 64) throw DomainError("extension degree " + std::to_string(n) + " is too large");
  return make(p, static_cast<unsigned>(n));
}

std::string Field::designation() const {
  if (n() == 1) return std::to_string(p());
  return std::to_string(p()) + "^" + std::to_string(n());
}

Fq Field::element(std::uint64_t index) const {
  if (index >= q()) {
    throw DomainError("element index " + std::to_string(index) + " out of range for F_" + std::to_string(q()));
  }
  return Fq{index};
}

Fq Field::embed(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(data_->p);
  return Fq{static_cast<std::uint64_t>(((value % p) + p) % p)};
}

std::vector<std::uint64_t> Field::coefficients(Fq a) const {
  std::vector<std::uint64_t> out(n());
  for (auto& c : out) {
    c = a.index % p();
    a.index /= p();
  }
  return out;
}

Fq Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > n()) throw DomainError("too many coefficients for F_" + std::to_string(q()));
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p()) throw DomainError("coefficient out of range [0, p)");
    index += coeffs[i] * data_->p_powers[i];
  }
  return Fq{index};
}

Fq Field::pow(Fq a, std::uint64_t e) const {
  if (!data_->log.empty()) {
    if (a.index == 0) return Fq{e == 0 ? 1u : 0u};
    const std::uint64_t order = q() - 1;
    return Fq{data_->exp[(data_->log[a.index] * (e % order)) % order]};
  }
  return detail::pow_square_multiply(*data_, a, e);
}

Fq Field::inv(Fq a) const {
  if (a.index == 0) throw DomainError("inversion of zero");
  if (!data_->log.empty()) {
    const std::uint64_t order = q() - 1;
    return Fq{data_->exp[(order - data_->log[a.index]) % order]};
  }
  return detail::pow_square_multiply(*data_, a, q() - 2);
}

Fq Field::frobenius(Fq a, unsigned k) const { return pow(a, data_->p_powers[k % n()]); }

bool Field::is_dth_power(Fq a, std::uint64_t d) const {
  if (d == 0 || (q() - 1) % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide q-1 = " + std::to_string(q() - 1));
  }
  if (a.index == 0) throw DomainError("d-th power test is defined on nonzero elements only");
  return pow(a, (q() - 1) / d) == one();
}

std::vector<Fq> Field::roots_of_unity(std::uint64_t d) const {
  if (d == 0 || (q() - 1) % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide q-1 = " + std::to_string(q() - 1));
  }
  const Fq step = pow(primitive_element(), (q() - 1) / d);
  std::vector<Fq> out;
  out.reserve(d);
  Fq z = one();
  for (std::uint64_t j = 0; j < d; ++j) {
    out.push_back(z);
    z = mul(z, step);
  }
  return out;
}

bool Field::is_square(Fq a) const {
  if (a.index == 0 || q() % 2 == 0) return true;
  return pow(a, (q() - 1) / 2) == one();
}

}  // namespace ppforge
