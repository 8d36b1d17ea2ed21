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

#include "ppforge/oracle.hpp"

#include <array>
#include <string>
#include <utility>

#include "ppforge/error.hpp"

namespace ppforge {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 8> kSuiteNames{{
    {Suite::lemma, "lemma"},
    {Suite::theorem1, "theorem1"},
    {Suite::proposition, "proposition"},
    {Suite::corollary2, "corollary2"},
    {Suite::trace_theorem, "trace_theorem"},
    {Suite::hermite, "hermite"},
    {Suite::example_family, "example_family"},
    {Suite::structural, "structural"},
}};

}  // namespace

bool is_permutation(const Field& field, const FqPoly& f, std::uint64_t max_q) {
  const std::uint64_t q = field.q();
  if (q > max_q) {
    throw OracleBoundError("F_" + std::to_string(q) + " exceeds the brute-force bound " + std::to_string(max_q));
  }

  // Sparse polynomials of high degree are cheaper term by term.
  std::vector<std::pair<std::uint64_t, Fq>> terms;
  const auto c = f.coefficients();
  const bool sparse = f.term_count() * 16 < c.size();
  if (sparse) {
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e].index != 0) terms.emplace_back(e, c[e]);
    }
  }

  std::vector<char> hit(q, 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    const Fq a{i};
    Fq v{0};
    if (sparse) {
      for (const auto& [e, coeff] : terms) v = field.add(v, field.mul(coeff, field.pow(a, e)));
    } else {
      v = eval(field, f, a);
    }
    if (hit[v.index]) return false;
    hit[v.index] = 1;
  }
  return true;
}

std::string_view suite_name(Suite s) noexcept {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, known] : kSuiteNames) {
    if (known == name) return suite;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& entry : kSuiteNames) out.push_back(entry.first);
  return out;
}

std::vector<std::string> default_fields(Suite s) {
  switch (s) {
    case Suite::lemma:
    case Suite::structural:
      return {"2^2", "5", "7", "2^3", "3^2", "11", "13", "2^4", "5^2", "3^3"};
    case Suite::theorem1:
    case Suite::hermite:
      return {"7", "3^2", "11", "13", "5^2", "3^3"};
    case Suite::proposition:
    case Suite::corollary2:
      return {"2^2", "2^3", "3^2", "2^4", "5^2", "3^3"};
    case Suite::trace_theorem:
      return {"2^3", "3^2", "5^2", "3^3"};
    case Suite::example_family:
      return {"3^2", "5^2", "7^2", "11^2", "13^2"};
  }
  return {};
}

}  // namespace ppforge
