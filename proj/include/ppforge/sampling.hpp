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

// Parameter corpora for the equivalence suites. Every sample set is a pure
// function of (seed, field, purpose), so suites reproduce bit for bit.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ppforge/field.hpp"
#include "ppforge/poly.hpp"

namespace ppforge {

/// mt19937_64 with an implementation-independent bounded draw.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Fq element(const Field& field) { return Fq{below(field.q())}; }
  Fq nonzero(const Field& field) { return Fq{1 + below(field.q() - 1)}; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream per (seed, purpose tag, field, sub-stream).
SampleRng sample_rng(std::uint64_t seed, std::uint64_t tag, const Field& field, std::uint64_t stream = 0);

/// Degree drawn uniformly from [0, max_degree], leading coefficient nonzero.
FqPoly random_poly(const Field& field, SampleRng& rng, std::uint64_t max_degree);

/// The h sample for one (q, d): 1, h_d, x, then random polynomials of degree
/// at most d + 1 up to 200 in total.
std::vector<FqPoly> lemma_h_samples(const Field& field, std::uint64_t d, std::uint64_t seed);

/// Cofactors g0: every constant, then 20 random polynomials of degree 1..3.
std::vector<FqPoly> theorem1_cofactors(const Field& field, std::uint64_t d, std::uint64_t seed);

/// Additive corpus: every a_0 x + a_1 x^p + a_2 x^(p^2) with a_i in
/// {0, 1, t}, the trace, then 30 uniformly random F_p-linear maps of F_q
/// (length n). Duplicates removed, first occurrence kept.
std::vector<AdditivePoly> additive_samples(const Field& field, std::uint64_t seed);

/// g corpus: every polynomial of degree <= 2 with coefficients in {0, 1, t},
/// then 20 random polynomials of degree <= 4.
std::vector<FqPoly> additive_g_samples(const Field& field, std::uint64_t seed);

/// All of additive_samples squared, followed by (A, trace) for every A with
/// F_p coefficients of length n not already covered.
std::vector<std::pair<AdditivePoly, AdditivePoly>> additive_pairs(const Field& field, std::uint64_t seed);

/// Every additive polynomial a_0 x + ... + a_{len-1} x^(p^(len-1)) with a_i in F_p.
std::vector<AdditivePoly> prime_field_additive(const Field& field, unsigned length);

/// Every polynomial of degree <= max_degree with coefficients in F_p
/// (including zero).
std::vector<FqPoly> prime_field_polys(const Field& field, unsigned max_degree);

/// Ten random g of degree <= 3 for the trace construction.
std::vector<FqPoly> trace_g_samples(const Field& field, std::uint64_t seed);

}  // namespace ppforge
