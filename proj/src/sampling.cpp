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

#include "ppforge/sampling.hpp"

#include <algorithm>

namespace ppforge {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum Tag : std::uint64_t { kLemmaH = 1, kCofactor, kAdditive, kAdditiveG, kTraceG };

template <typename T>
void append_unique(std::vector<T>& out, T value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(std::move(value));
}

// {0, 1, t}, deduplicated (t is 0 in a prime field).
std::vector<Fq> small_coefficients(const Field& field) {
  std::vector<Fq> out;
  for (Fq c : {field.zero(), field.one(), field.generator()}) append_unique(out, c);
  return out;
}

// Every length-n vector over F_p, in index order (first entry fastest).
std::vector<std::vector<Fq>> prime_digit_vectors(const Field& field, unsigned length) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < length; ++i) total *= field.p();
  std::vector<std::vector<Fq>> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fq> coeffs(length);
    std::uint64_t rest = idx;
    for (auto& c : coeffs) {
      c = Fq{rest % field.p()};
      rest /= field.p();
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

SampleRng sample_rng(std::uint64_t seed, std::uint64_t tag, const Field& field, std::uint64_t stream) {
  std::uint64_t s = splitmix(seed);
  s = splitmix(s ^ tag);
  s = splitmix(s ^ field.q());
  s = splitmix(s ^ stream);
  return SampleRng(s);
}

FqPoly random_poly(const Field& field, SampleRng& rng, std::uint64_t max_degree) {
  const std::uint64_t degree = rng.below(max_degree + 1);
  std::vector<Fq> coeffs(degree + 1);
  for (std::uint64_t i = 0; i < degree; ++i) coeffs[i] = rng.element(field);
  coeffs[degree] = rng.nonzero(field);
  return FqPoly(std::move(coeffs));
}

std::vector<FqPoly> lemma_h_samples(const Field& field, std::uint64_t d, std::uint64_t seed) {
  std::vector<FqPoly> out{FqPoly::constant(field.one()), h_d_poly(d), FqPoly::x()};
  auto rng = sample_rng(seed, kLemmaH, field, d);
  while (out.size() < 200) out.push_back(random_poly(field, rng, d + 1));
  return out;
}

std::vector<FqPoly> theorem1_cofactors(const Field& field, std::uint64_t d, std::uint64_t seed) {
  std::vector<FqPoly> out;
  for (std::uint64_t c = 0; c < field.q(); ++c) out.push_back(FqPoly::constant(Fq{c}));
  auto rng = sample_rng(seed, kCofactor, field, d);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t degree = 1 + rng.below(3);
    std::vector<Fq> coeffs(degree + 1);
    for (std::uint64_t k = 0; k < degree; ++k) coeffs[k] = rng.element(field);
    coeffs[degree] = rng.nonzero(field);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

std::vector<AdditivePoly> additive_samples(const Field& field, std::uint64_t seed) {
  std::vector<AdditivePoly> out;
  const auto small = small_coefficients(field);
  for (Fq a2 : small) {
    for (Fq a1 : small) {
      for (Fq a0 : small) append_unique(out, AdditivePoly({a0, a1, a2}));
    }
  }
  append_unique(out, trace_poly(field));
  auto rng = sample_rng(seed, kAdditive, field);
  for (int i = 0; i < 30; ++i) {
    std::vector<Fq> coeffs(field.n());
    for (auto& c : coeffs) c = rng.element(field);
    append_unique(out, AdditivePoly(std::move(coeffs)));
  }
  return out;
}

std::vector<FqPoly> additive_g_samples(const Field& field, std::uint64_t seed) {
  std::vector<FqPoly> out;
  const auto small = small_coefficients(field);
  for (Fq c2 : small) {
    for (Fq c1 : small) {
      for (Fq c0 : small) append_unique(out, FqPoly({c0, c1, c2}));
    }
  }
  auto rng = sample_rng(seed, kAdditiveG, field);
  for (int i = 0; i < 20; ++i) out.push_back(random_poly(field, rng, 4));
  return out;
}

std::vector<std::pair<AdditivePoly, AdditivePoly>> additive_pairs(const Field& field, std::uint64_t seed) {
  const auto samples = additive_samples(field, seed);
  std::vector<std::pair<AdditivePoly, AdditivePoly>> out;
  out.reserve(samples.size() * samples.size());
  for (const auto& B : samples) {
    for (const auto& A : samples) out.emplace_back(A, B);
  }
  const AdditivePoly trace = trace_poly(field);
  for (auto& A : prime_field_additive(field, field.n())) {
    if (std::find(samples.begin(), samples.end(), A) == samples.end()) out.emplace_back(std::move(A), trace);
  }
  return out;
}

std::vector<AdditivePoly> prime_field_additive(const Field& field, unsigned length) {
  std::vector<AdditivePoly> out;
  for (auto& coeffs : prime_digit_vectors(field, length)) out.emplace_back(std::move(coeffs));
  return out;
}

std::vector<FqPoly> prime_field_polys(const Field& field, unsigned max_degree) {
  std::vector<FqPoly> out;
  for (auto& coeffs : prime_digit_vectors(field, max_degree + 1)) out.emplace_back(std::move(coeffs));
  return out;
}

std::vector<FqPoly> trace_g_samples(const Field& field, std::uint64_t seed) {
  auto rng = sample_rng(seed, kTraceG, field);
  std::vector<FqPoly> out;
  for (int i = 0; i < 10; ++i) out.push_back(random_poly(field, rng, 3));
  return out;
}

}  // namespace ppforge
